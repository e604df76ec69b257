//! Validity checks for all three witness kinds against a graph:
//! edge coverage, per-vertex connectivity, and structural soundness.

use crate::types::{EliminationForest, PathDecomposition, TreeDecomposition};
use ugraph_core::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompViolation {
    BagVertexOutOfRange { node: usize, vertex: u32 },
    TreeEdgeOutOfRange { a: usize, b: usize },
    TreeNotConnected,
    TreeHasCycle,
    RootOutOfRange { root: usize },
    VertexNotCovered { vertex: u32 },
    EdgeNotCovered { u: u32, v: u32 },
    VertexOccurrencesDisconnected { vertex: u32 },
    ParentOutOfRange { vertex: u32, parent: u32 },
    ParentCycle,
    ForestSizeMismatch { expected: usize, got: usize },
    EdgeNotOnRootPath { u: u32, v: u32 },
}

impl std::fmt::Display for DecompViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use DecompViolation::*;
        match self {
            BagVertexOutOfRange { node, vertex } => {
                write!(f, "bag {node} contains vertex {vertex} outside the graph")
            }
            TreeEdgeOutOfRange { a, b } => write!(f, "tree edge ({a}, {b}) out of range"),
            TreeNotConnected => write!(f, "decomposition tree is not connected"),
            TreeHasCycle => write!(f, "decomposition tree contains a cycle"),
            RootOutOfRange { root } => write!(f, "root {root} out of range"),
            VertexNotCovered { vertex } => write!(f, "vertex {vertex} appears in no bag"),
            EdgeNotCovered { u, v } => write!(f, "edge ({u}, {v}) is covered by no bag"),
            VertexOccurrencesDisconnected { vertex } => {
                write!(f, "bags containing vertex {vertex} do not form a connected subtree")
            }
            ParentOutOfRange { vertex, parent } => {
                write!(f, "vertex {vertex} has parent {parent} outside the forest")
            }
            ParentCycle => write!(f, "parent map contains a cycle"),
            ForestSizeMismatch { expected, got } => {
                write!(f, "forest has {got} vertices, graph has {expected}")
            }
            EdgeNotOnRootPath { u, v } => {
                write!(f, "edge ({u}, {v}) endpoints are not in ancestor-descendant relation")
            }
        }
    }
}

pub type ValidationResult = Result<(), DecompViolation>;

/// Validate a tree-decomposition of `g`.
pub fn validate_tree(d: &TreeDecomposition, g: &Graph) -> ValidationResult {
    let nodes = d.bags.len();
    for (node, bag) in d.bags.iter().enumerate() {
        for &v in bag {
            if v as usize >= g.n() {
                return Err(DecompViolation::BagVertexOutOfRange { node, vertex: v });
            }
        }
    }
    for &(a, b) in &d.edges {
        if a >= nodes || b >= nodes || a == b {
            return Err(DecompViolation::TreeEdgeOutOfRange { a, b });
        }
    }
    if let Some(root) = d.root {
        if root >= nodes {
            return Err(DecompViolation::RootOutOfRange { root });
        }
    }
    // tree structure: connected and acyclic
    if nodes > 0 {
        if d.edges.len() + 1 != nodes {
            return Err(if d.edges.len() + 1 < nodes {
                DecompViolation::TreeNotConnected
            } else {
                DecompViolation::TreeHasCycle
            });
        }
        let mut uf: Vec<usize> = (0..nodes).collect();
        fn find(uf: &mut Vec<usize>, x: usize) -> usize {
            if uf[x] != x {
                let r = find(uf, uf[x]);
                uf[x] = r;
            }
            uf[x]
        }
        for &(a, b) in &d.edges {
            let (ra, rb) = (find(&mut uf, a), find(&mut uf, b));
            if ra == rb {
                return Err(DecompViolation::TreeHasCycle);
            }
            uf[ra] = rb;
        }
    }
    // coverage of vertices and edges
    let mut bag_count = vec![0usize; g.n()];
    for bag in &d.bags {
        for &v in bag {
            bag_count[v as usize] += 1;
        }
    }
    for v in 0..g.n() as u32 {
        if bag_count[v as usize] == 0 {
            return Err(DecompViolation::VertexNotCovered { vertex: v });
        }
    }
    'edge: for (u, v) in g.edges() {
        for bag in &d.bags {
            if bag.binary_search(&u).is_ok() && bag.binary_search(&v).is_ok() {
                continue 'edge;
            }
        }
        return Err(DecompViolation::EdgeNotCovered { u, v });
    }
    // per-vertex connectivity: #occurrences - 1 tree edges inside the set
    let mut inner_edges = vec![0usize; g.n()];
    for &(a, b) in &d.edges {
        let (ba, bb) = (&d.bags[a], &d.bags[b]);
        for &v in ba {
            if bb.binary_search(&v).is_ok() {
                inner_edges[v as usize] += 1;
            }
        }
    }
    for v in 0..g.n() {
        if inner_edges[v] + 1 != bag_count[v] {
            return Err(DecompViolation::VertexOccurrencesDisconnected { vertex: v as u32 });
        }
    }
    Ok(())
}

/// Validate a path-decomposition of `g`.
pub fn validate_path(d: &PathDecomposition, g: &Graph) -> ValidationResult {
    validate_tree(&d.as_tree(), g)
}

/// Validate an elimination forest of `g`: the forest is on exactly the
/// graph's vertex set and every edge joins an ancestor-descendant pair.
pub fn validate_elimination(f: &EliminationForest, g: &Graph) -> ValidationResult {
    if f.parent.len() != g.n() {
        return Err(DecompViolation::ForestSizeMismatch { expected: g.n(), got: f.parent.len() });
    }
    for (v, p) in f.parent.iter().enumerate() {
        if let Some(p) = p {
            if *p as usize >= g.n() || *p as usize == v {
                return Err(DecompViolation::ParentOutOfRange { vertex: v as u32, parent: *p });
            }
        }
    }
    if f.depth().is_none() {
        return Err(DecompViolation::ParentCycle);
    }
    for (u, v) in g.edges() {
        if !f.is_ancestor(u, v) && !f.is_ancestor(v, u) {
            return Err(DecompViolation::EdgeNotOnRootPath { u, v });
        }
    }
    Ok(())
}

/// Any witness kind, for uniform validation entry points.
#[derive(Clone, Debug)]
pub enum Decomposition {
    Tree(TreeDecomposition),
    Path(PathDecomposition),
    Elimination(EliminationForest),
}

pub fn validate(d: &Decomposition, g: &Graph) -> ValidationResult {
    match d {
        Decomposition::Tree(t) => validate_tree(t, g),
        Decomposition::Path(p) => validate_path(p, g),
        Decomposition::Elimination(f) => validate_elimination(f, g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_single_bag_is_valid() {
        let g = Graph::complete(4);
        let d = TreeDecomposition::single_bag((0..4).collect());
        assert_eq!(validate_tree(&d, &g), Ok(()));
        assert_eq!(d.width(), 3);
    }

    #[test]
    fn path_of_p4_is_valid_width_1() {
        let g = Graph::path(4);
        let d = PathDecomposition::new(vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(validate_path(&d, &g), Ok(()));
        assert_eq!(d.width(), 1);
    }

    #[test]
    fn missing_edge_coverage_detected() {
        let g = Graph::path(4);
        let d = PathDecomposition::new(vec![vec![0, 1], vec![2], vec![2, 3]]);
        assert_eq!(
            validate_path(&d, &g),
            Err(DecompViolation::EdgeNotCovered { u: 1, v: 2 })
        );
    }

    #[test]
    fn disconnected_occurrences_detected() {
        let g = Graph::path(3);
        let d = TreeDecomposition {
            bags: vec![vec![0, 1], vec![1, 2], vec![0]],
            edges: vec![(0, 1), (1, 2)],
            root: None,
        };
        assert_eq!(
            validate_tree(&d, &g),
            Err(DecompViolation::VertexOccurrencesDisconnected { vertex: 0 })
        );
    }

    #[test]
    fn elimination_validation() {
        let g = Graph::path(4);
        // 1 is root; 0 below 1; 2 below 1; 3 below 2: covers edges 01, 12, 23.
        let f = EliminationForest { parent: vec![Some(1), None, Some(1), Some(2)] };
        assert_eq!(validate_elimination(&f, &g), Ok(()));
        // star rooted anywhere but the center fails
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let bad = EliminationForest { parent: vec![Some(1), None, Some(1), Some(1)] };
        assert_eq!(
            validate_elimination(&bad, &star),
            Err(DecompViolation::EdgeNotOnRootPath { u: 0, v: 2 })
        );
    }
}
