//! The three decomposition witnesses: tree-decompositions,
//! path-decompositions, and elimination forests.

use serde::{Deserialize, Serialize};

/// A tree-decomposition: bags indexed by the nodes of a tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    /// Bag contents, sorted vertex lists; index = tree node id.
    pub bags: Vec<Vec<u32>>,
    /// Tree edges between node ids.
    pub edges: Vec<(usize, usize)>,
    /// Optional root node.
    pub root: Option<usize>,
}

impl TreeDecomposition {
    pub fn single_bag(bag: Vec<u32>) -> Self {
        let mut bag = bag;
        bag.sort_unstable();
        bag.dedup();
        TreeDecomposition { bags: vec![bag], edges: Vec::new(), root: Some(0) }
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    /// Width = max bag size - 1; -1 for a decomposition with only empty bags.
    pub fn width(&self) -> i64 {
        self.bags.iter().map(|b| b.len() as i64 - 1).max().unwrap_or(-1)
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        adj
    }

    /// Depth (max nodes on a root-to-leaf path); requires a root.
    pub fn rooted_depth(&self) -> Option<usize> {
        let root = self.root?;
        let adj = self.neighbors();
        let mut depth = vec![0usize; self.bags.len()];
        let mut stack = vec![(root, usize::MAX)];
        let mut best = 0;
        depth[root] = 1;
        while let Some((v, parent)) = stack.pop() {
            best = best.max(depth[v]);
            for &w in &adj[v] {
                if w != parent {
                    depth[w] = depth[v] + 1;
                    stack.push((w, v));
                }
            }
        }
        Some(best)
    }

    /// Maximum number of children over nodes, taking `root` as orientation.
    pub fn max_children(&self) -> Option<usize> {
        let root = self.root?;
        let adj = self.neighbors();
        let mut best = 0;
        let mut stack = vec![(root, usize::MAX)];
        while let Some((v, parent)) = stack.pop() {
            let kids: Vec<usize> = adj[v].iter().copied().filter(|&w| w != parent).collect();
            best = best.max(kids.len());
            for w in kids {
                stack.push((w, v));
            }
        }
        Some(best)
    }
}

/// A path-decomposition: an ordered sequence of bags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathDecomposition {
    pub bags: Vec<Vec<u32>>,
}

impl PathDecomposition {
    pub fn new(bags: Vec<Vec<u32>>) -> Self {
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        PathDecomposition { bags }
    }

    pub fn width(&self) -> i64 {
        self.bags.iter().map(|b| b.len() as i64 - 1).max().unwrap_or(-1)
    }

    /// View as a tree-decomposition whose tree is a path.
    pub fn as_tree(&self) -> TreeDecomposition {
        TreeDecomposition {
            bags: self.bags.clone(),
            edges: (1..self.bags.len()).map(|i| (i - 1, i)).collect(),
            root: if self.bags.is_empty() { None } else { Some(0) },
        }
    }

    pub fn adhesions(&self) -> Vec<Vec<u32>> {
        self.bags
            .windows(2)
            .map(|w| w[0].iter().copied().filter(|v| w[1].binary_search(v).is_ok()).collect())
            .collect()
    }
}

/// A rooted forest on the vertex set of a graph; `parent[v] = None` marks
/// roots. The decomposed graph must be a subgraph of its transitive closure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationForest {
    pub parent: Vec<Option<u32>>,
}

impl EliminationForest {
    pub fn n(&self) -> usize {
        self.parent.len()
    }

    /// Depth = max vertices on a root-to-leaf path; 0 for the empty forest.
    /// Returns None if the parent map contains a cycle.
    pub fn depth(&self) -> Option<usize> {
        fn visit(
            v: usize,
            parent: &[Option<u32>],
            memo: &mut [usize],
            state: &mut [u8],
        ) -> Option<usize> {
            match state[v] {
                2 => return Some(memo[v]),
                1 => return None, // cycle
                _ => {}
            }
            state[v] = 1;
            let d = match parent[v] {
                None => 1,
                Some(p) => visit(p as usize, parent, memo, state)? + 1,
            };
            memo[v] = d;
            state[v] = 2;
            Some(d)
        }
        let n = self.parent.len();
        let mut memo = vec![0usize; n];
        let mut state = vec![0u8; n];
        let mut best = 0;
        for v in 0..n {
            best = best.max(visit(v, &self.parent, &mut memo, &mut state)?);
        }
        Some(best)
    }

    /// Is `a` an ancestor of `b` (or equal)?
    pub fn is_ancestor(&self, a: u32, b: u32) -> bool {
        let mut cur = b;
        let mut steps = 0;
        loop {
            if cur == a {
                return true;
            }
            match self.parent[cur as usize] {
                None => return false,
                Some(p) => cur = p,
            }
            steps += 1;
            if steps > self.parent.len() {
                return false;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn widths_and_depths() {
        let td = TreeDecomposition {
            bags: vec![vec![0, 1], vec![1, 2], vec![2, 3]],
            edges: vec![(0, 1), (1, 2)],
            root: Some(0),
        };
        assert_eq!(td.width(), 1);
        assert_eq!(td.rooted_depth(), Some(3));

        let pd = PathDecomposition::new(vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(pd.width(), 1);
        assert_eq!(pd.adhesions(), vec![vec![1]]);

        let ef = EliminationForest { parent: vec![None, Some(0), Some(1), Some(0)] };
        assert_eq!(ef.depth(), Some(3));
        assert!(ef.is_ancestor(0, 2));
        assert!(!ef.is_ancestor(3, 2));
    }

    #[test]
    fn cyclic_parent_map_detected() {
        let ef = EliminationForest { parent: vec![Some(1), Some(0)] };
        assert_eq!(ef.depth(), None);
    }
}
