//! Finite simple undirected graphs with stable vertex indexing 0..n-1.

use crate::error::{CoreError, Result};
use serde::{Deserialize, Serialize};

/// A finite simple undirected graph. Vertices are indices `0..n`.
/// Immutable after construction; no self-loops or parallel edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<u32>>, // sorted neighbor lists
    m: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph { n, adj: vec![Vec::new(); n], m: 0 }
    }

    /// Build from an edge list. Duplicate edges collapse; self-loops and
    /// out-of-range endpoints are errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == v {
                return Err(CoreError::SelfLoop(u));
            }
            for x in [u, v] {
                if x as usize >= n {
                    return Err(CoreError::VertexOutOfRange { vertex: x, n });
                }
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        let mut m = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { n, adj, m: m / 2 })
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            for v in (u + 1)..n as u32 {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, edges).expect("complete graph is well-formed")
    }

    /// Path 0-1-...-(n-1).
    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n as u32).map(|v| (v - 1, v))).expect("path is well-formed")
    }

    /// Cycle on n >= 3 vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut edges: Vec<_> = (1..n as u32).map(|v| (v - 1, v)).collect();
        edges.push((n as u32 - 1, 0));
        Graph::from_edges(n, edges).expect("cycle is well-formed")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, u: u32) -> &[u32] {
        &self.adj[u as usize]
    }

    pub fn degree(&self, u: u32) -> usize {
        self.adj[u as usize].len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        0..self.n as u32
    }

    /// Edges as ordered pairs (u, v) with u < v, lexicographically sorted.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.n as u32).flat_map(move |u| {
            self.adj[u as usize]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Adjacency rows as 64-bit masks; only for graphs on at most 64 vertices.
    pub fn bitrows(&self) -> Result<Vec<u64>> {
        if self.n > 64 {
            return Err(CoreError::SizeLimit { op: "bitrows", limit: 64, got: self.n });
        }
        let mut rows = vec![0u64; self.n];
        for u in 0..self.n {
            for &v in &self.adj[u] {
                rows[u] |= 1u64 << v;
            }
        }
        Ok(rows)
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.component_of(0).len() == self.n
    }

    fn component_of(&self, start: u32) -> Vec<u32> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        let mut out = Vec::new();
        seen[start as usize] = true;
        while let Some(u) = stack.pop() {
            out.push(u);
            for &v in &self.adj[u as usize] {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    stack.push(v);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n as u32 {
            if !seen[s as usize] {
                let comp = self.component_of(s);
                for &v in &comp {
                    seen[v as usize] = true;
                }
                comps.push(comp);
            }
        }
        comps
    }

    /// Induced subgraph on `verts` (sorted order defines the new indexing).
    /// Returns the subgraph and the map new-index -> old-index.
    pub fn induced(&self, verts: &[u32]) -> (Graph, Vec<u32>) {
        let mut vs: Vec<u32> = verts.to_vec();
        vs.sort_unstable();
        vs.dedup();
        let mut pos = vec![u32::MAX; self.n];
        for (i, &v) in vs.iter().enumerate() {
            pos[v as usize] = i as u32;
        }
        let mut edges = Vec::new();
        for &v in &vs {
            for &w in &self.adj[v as usize] {
                if v < w && pos[w as usize] != u32::MAX {
                    edges.push((pos[v as usize], pos[w as usize]));
                }
            }
        }
        (
            Graph::from_edges(vs.len(), edges).expect("induced subgraph is well-formed"),
            vs,
        )
    }

    /// The same graph with extra edges added (duplicates ignored).
    pub fn with_extra_edges<I>(&self, extra: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut edges: Vec<(u32, u32)> = self.edges().collect();
        edges.extend(extra);
        Graph::from_edges(self.n, edges)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n as u32;
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + off, v + off)));
        Graph::from_edges(self.n + other.n, edges).expect("union of valid graphs is valid")
    }

    /// Relabel through a permutation `perm` (perm[v] = new index of v).
    pub fn relabel(&self, perm: &[u32]) -> Graph {
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u as usize], perm[v as usize])))
            .expect("relabeling keeps the graph valid")
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|u| self.adj[u].len()).collect();
        d.sort_unstable();
        d
    }
}

/// Serde representation: `{"n": ..., "edges": [[u, v], ...]}` with edges sorted.
#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(u32, u32)>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr { n: self.n, edges: self.edges().collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(d)?;
        Graph::from_edges(repr.n, repr.edges).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_and_queries() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(1, 2));
        assert!(!g.has_edge(0, 3));
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(CoreError::VertexOutOfRange { .. })
        ));
        assert!(matches!(Graph::from_edges(3, [(1, 1)]), Err(CoreError::SelfLoop(1))));
    }

    #[test]
    fn components_and_induced() {
        let g = Graph::from_edges(5, [(0, 1), (2, 3)]).unwrap();
        let comps = g.components();
        assert_eq!(comps, vec![vec![0, 1], vec![2, 3], vec![4]]);
        let (h, back) = g.induced(&[2, 3, 4]);
        assert_eq!(h.n(), 3);
        assert_eq!(h.edge_count(), 1);
        assert_eq!(back, vec![2, 3, 4]);
    }

    #[test]
    fn json_roundtrip() {
        let g = Graph::from_edges(4, [(0, 2), (1, 3)]).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        let h: Graph = serde_json::from_str(&s).unwrap();
        assert_eq!(g, h);
    }
}
