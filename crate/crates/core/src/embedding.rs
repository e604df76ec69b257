//! Embeddings (injective vertex maps) and their machine-checkable
//! verification, plus jump sets over host graphs.

use crate::error::{CoreError, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Subgraph,
    Induced,
}

/// An embedding certificate: `map[g] = host vertex of guest vertex g`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Embedding {
    pub guest: Graph,
    pub host: Graph,
    pub mode: Mode,
    pub map: Vec<u32>,
}

/// First violation found when checking an embedding, in a fixed scan order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    MapLengthMismatch { expected: usize, got: usize },
    ImageOutOfRange { guest_vertex: u32, image: u32 },
    NotInjective { guest_u: u32, guest_v: u32, image: u32 },
    EdgeNotPreserved { guest_u: u32, guest_v: u32 },
    NonEdgeViolated { guest_u: u32, guest_v: u32 },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::MapLengthMismatch { expected, got } => {
                write!(f, "map has {got} entries, guest has {expected} vertices")
            }
            Violation::ImageOutOfRange { guest_vertex, image } => {
                write!(f, "guest vertex {guest_vertex} maps to {image}, outside the host")
            }
            Violation::NotInjective { guest_u, guest_v, image } => {
                write!(f, "guest vertices {guest_u} and {guest_v} both map to {image}")
            }
            Violation::EdgeNotPreserved { guest_u, guest_v } => {
                write!(f, "guest edge ({guest_u}, {guest_v}) maps to a host non-edge")
            }
            Violation::NonEdgeViolated { guest_u, guest_v } => {
                write!(f, "guest non-edge ({guest_u}, {guest_v}) maps to a host edge")
            }
        }
    }
}

/// Check a map without building an `Embedding` (hosts can be large).
pub fn verify_map(
    guest: &Graph,
    host: &Graph,
    map: &[u32],
    mode: Mode,
) -> std::result::Result<(), Violation> {
    if map.len() != guest.n() {
        return Err(Violation::MapLengthMismatch { expected: guest.n(), got: map.len() });
    }
    for (g, &h) in map.iter().enumerate() {
        if h as usize >= host.n() {
            return Err(Violation::ImageOutOfRange { guest_vertex: g as u32, image: h });
        }
    }
    let mut by_image: Vec<(u32, u32)> = map.iter().copied().zip(0..map.len() as u32).collect();
    by_image.sort_unstable();
    for w in by_image.windows(2) {
        if w[0].0 == w[1].0 {
            let (mut a, mut b) = (w[0].1, w[1].1);
            if a > b {
                std::mem::swap(&mut a, &mut b);
            }
            return Err(Violation::NotInjective { guest_u: a, guest_v: b, image: w[0].0 });
        }
    }
    for (u, v) in guest.edges() {
        if !host.has_edge(map[u as usize], map[v as usize]) {
            return Err(Violation::EdgeNotPreserved { guest_u: u, guest_v: v });
        }
    }
    if mode == Mode::Induced {
        for u in 0..guest.n() as u32 {
            for v in (u + 1)..guest.n() as u32 {
                if !guest.has_edge(u, v) && host.has_edge(map[u as usize], map[v as usize]) {
                    return Err(Violation::NonEdgeViolated { guest_u: u, guest_v: v });
                }
            }
        }
    }
    Ok(())
}

/// Verify an embedding certificate; `Ok(())` iff all invariants hold.
pub fn verify_embedding(e: &Embedding) -> std::result::Result<(), Violation> {
    verify_map(&e.guest, &e.host, &e.map, e.mode)
}

/// A set of jumps (non-edges) over a host graph.
#[derive(Clone, Debug)]
pub struct JumpSet {
    host: Graph,
    jumps: BTreeSet<(u32, u32)>,
    disjoint: bool,
}

impl JumpSet {
    pub fn new<I>(host: Graph, jumps: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        Self::build(host, jumps, false)
    }

    /// As `new`, additionally requiring that no vertex appears in two jumps.
    pub fn new_disjoint<I>(host: Graph, jumps: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        Self::build(host, jumps, true)
    }

    fn build<I>(host: Graph, jumps: I, disjoint: bool) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut set = BTreeSet::new();
        let mut touched = BTreeSet::new();
        for (a, b) in jumps {
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if u == v {
                return Err(CoreError::SelfLoop(u));
            }
            for x in [u, v] {
                if x as usize >= host.n() {
                    return Err(CoreError::VertexOutOfRange { vertex: x, n: host.n() });
                }
            }
            if host.has_edge(u, v) {
                return Err(CoreError::Parse(format!("jump ({u}, {v}) is an edge of the host")));
            }
            if disjoint && (!touched.insert(u) || !touched.insert(v)) {
                return Err(CoreError::Parse(format!(
                    "jump ({u}, {v}) shares a vertex with another jump"
                )));
            }
            set.insert((u, v));
        }
        Ok(JumpSet { host, jumps: set, disjoint })
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn jumps(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.jumps.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.jumps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.jumps.is_empty()
    }

    pub fn is_disjoint(&self) -> bool {
        self.disjoint
    }

    /// Host together with the jump edges.
    pub fn augmented_graph(&self) -> Graph {
        self.host
            .with_extra_edges(self.jumps.iter().copied())
            .expect("jumps are valid non-edges")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_on_k2_is_induced() {
        let k2 = Graph::complete(2);
        let e = Embedding { guest: k2.clone(), host: k2, mode: Mode::Induced, map: vec![0, 1] };
        assert!(verify_embedding(&e).is_ok());
    }

    #[test]
    fn p3_into_k3_subgraph_but_not_induced() {
        let p3 = Graph::path(3);
        let k3 = Graph::complete(3);
        let sub = Embedding {
            guest: p3.clone(),
            host: k3.clone(),
            mode: Mode::Subgraph,
            map: vec![0, 1, 2],
        };
        assert!(verify_embedding(&sub).is_ok());
        let ind = Embedding { guest: p3, host: k3, mode: Mode::Induced, map: vec![0, 1, 2] };
        assert_eq!(
            verify_embedding(&ind),
            Err(Violation::NonEdgeViolated { guest_u: 0, guest_v: 2 })
        );
    }

    #[test]
    fn p3_into_star_center_mapped_is_induced() {
        // Host K_{1,3} with center 0; path 0-1-2 maps its middle to the center.
        let p3 = Graph::path(3);
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let e = Embedding { guest: p3, host: star, mode: Mode::Induced, map: vec![1, 0, 2] };
        assert!(verify_embedding(&e).is_ok());
    }

    #[test]
    fn induced_implies_subgraph() {
        // Spot-check of the mode ordering on a fixture.
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let map = vec![0, 1, 2, 3];
        if verify_map(&g, &h, &map, Mode::Induced).is_ok() {
            assert!(verify_map(&g, &h, &map, Mode::Subgraph).is_ok());
        }
    }

    #[test]
    fn jump_must_be_a_non_edge() {
        let g = Graph::path(4);
        assert!(JumpSet::new(g.clone(), [(0, 1)]).is_err());
        let js = JumpSet::new(g.clone(), [(0, 2), (0, 3)]).unwrap();
        assert_eq!(js.len(), 2);
        assert!(JumpSet::new_disjoint(g.clone(), [(0, 2), (0, 3)]).is_err());
        let aug = JumpSet::new(g, [(0, 3)]).unwrap().augmented_graph();
        assert!(aug.has_edge(0, 3));
    }
}
