//! Blow-ups, universal-vertex augmentation, the degeneracy-based
//! subgraph-to-induced lift, and the disconnected-guest union host.

use crate::artifact::UniversalArtifact;
use crate::error::{Result, UniversalError};
use serde::{Deserialize, Serialize};
use ugraph_core::Graph;

/// Replace every vertex by a stable set of t vertices and every edge by a
/// complete bipartite link. Vertex u's block is [u*t, (u+1)*t).
pub fn blowup(g: &Graph, t: u32) -> Graph {
    let t = t as usize;
    let mut edges = Vec::with_capacity(g.edge_count() * t * t);
    for (u, v) in g.edges() {
        for a in 0..t as u32 {
            for b in 0..t as u32 {
                edges.push((u * t as u32 + a, v * t as u32 + b));
            }
        }
    }
    Graph::from_edges(g.n() * t, edges).expect("blow-up of a valid graph is valid")
}

/// Add t universal vertices (mutually adjacent, adjacent to all of g).
/// New vertices take indices g.n()..g.n()+t.
pub fn add_universal_vertices(g: &Graph, t: u32) -> Graph {
    let n = g.n() as u32;
    let mut edges: Vec<(u32, u32)> = g.edges().collect();
    for a in 0..t {
        for v in 0..n {
            edges.push((v, n + a));
        }
        for b in (a + 1)..t {
            edges.push((n + a, n + b));
        }
    }
    Graph::from_edges(g.n() + t as usize, edges).expect("augmentation is valid")
}

/// Metadata the induced-embedding procedure needs: the degeneracy order and
/// every vertex's back-neighbors, plus block offsets in the lifted graph.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LiftMeta {
    /// order[i] = vertex of the base graph at position i (smallest-last).
    pub order: Vec<u32>,
    /// position of each base vertex in the order.
    pub position: Vec<u32>,
    /// back-neighbors of each base vertex (by vertex id), sorted by position.
    pub back_neighbors: Vec<Vec<u32>>,
    /// start offset of each base vertex's stable set in the lifted graph.
    pub offset: Vec<u32>,
    /// lifted block sizes, 2^(back-degree).
    pub block_size: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct LiftedHost {
    pub graph: Graph,
    pub base: Graph,
    pub degeneracy_bound: usize,
    pub meta: LiftMeta,
}

/// Smallest-last degeneracy order with lowest-index tie-breaking:
/// repeatedly remove a minimum-degree vertex and place it last.
pub fn degeneracy_order(g: &Graph) -> (Vec<u32>, usize) {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v as u32)).collect();
    let mut order = vec![0u32; n];
    let mut degeneracy = 0;
    for pos in (0..n).rev() {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("a live vertex remains");
        degeneracy = degeneracy.max(deg[v]);
        order[pos] = v as u32;
        alive[v] = false;
        for &w in g.neighbors(v as u32) {
            if alive[w as usize] {
                deg[w as usize] -= 1;
            }
        }
    }
    (order, degeneracy)
}

/// Build the induced-universal lift of a d-degenerate base graph: vertex
/// v_i becomes a stable set of 2^(back-degree) vertices indexed by binary
/// vectors over v_i's back-neighbors; bit s set means "adjacent to the
/// whole block of the s-th back-neighbor".
pub fn sub_to_induced_lift(g: &Graph, d: usize, cap: usize) -> Result<LiftedHost> {
    let (order, degeneracy) = degeneracy_order(g);
    if degeneracy > d {
        let mut position = vec![0u32; g.n()];
        for (i, &v) in order.iter().enumerate() {
            position[v as usize] = i as u32;
        }
        let bad = *order
            .iter()
            .find(|&&v| {
                g.neighbors(v)
                    .iter()
                    .filter(|&&w| position[w as usize] < position[v as usize])
                    .count()
                    > d
            })
            .unwrap_or(&0);
        return Err(UniversalError::DegeneracyViolation {
            required: d,
            vertex: bad,
            got: degeneracy,
        });
    }
    let mut position = vec![0u32; g.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v as usize] = i as u32;
    }
    let mut back_neighbors: Vec<Vec<u32>> = vec![Vec::new(); g.n()];
    for v in 0..g.n() as u32 {
        let mut backs: Vec<u32> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| position[w as usize] < position[v as usize])
            .collect();
        backs.sort_by_key(|&w| position[w as usize]);
        back_neighbors[v as usize] = backs;
    }
    let mut offset = vec![0u32; g.n()];
    let mut block_size = vec![0u32; g.n()];
    let mut total: u128 = 0;
    for &v in &order {
        offset[v as usize] = total as u32;
        let b = 1u128 << back_neighbors[v as usize].len();
        block_size[v as usize] = b as u32;
        total += b;
        if total > cap as u128 {
            return Err(UniversalError::VertexCapExceeded { needed: total, cap });
        }
    }
    let mut edges = Vec::new();
    for &v in &order {
        let backs = &back_neighbors[v as usize];
        for idx in 0..block_size[v as usize] {
            let member = offset[v as usize] + idx;
            for (s, &w) in backs.iter().enumerate() {
                if idx >> s & 1 == 1 {
                    for wm in 0..block_size[w as usize] {
                        edges.push((offset[w as usize] + wm, member));
                    }
                }
            }
        }
    }
    let graph = Graph::from_edges(total as usize, edges)?;
    Ok(LiftedHost {
        graph,
        base: g.clone(),
        degeneracy_bound: d,
        meta: LiftMeta { order, position, back_neighbors, offset, block_size },
    })
}

/// A union host for disconnected guests: for i = 0..ceil(log2 n), take
/// ceil(n / 2^(i-1)) disjoint copies of builder(2^i).
#[derive(Clone, Debug)]
pub struct UnionHost {
    pub graph: Graph,
    /// (guest-size tier 2^i, copy vertex offsets, the tier's artifact)
    pub tiers: Vec<(u32, Vec<u32>, UniversalArtifact)>,
}

pub fn disconnected_lift<F>(builder: F, n: u32, cap: usize) -> Result<UnionHost>
where
    F: Fn(u32) -> Result<UniversalArtifact>,
{
    if n == 0 {
        return Err(UniversalError::BadParameter("disconnected_lift needs n >= 1".into()));
    }
    let ceil_log2 = if n <= 1 { 0 } else { 32 - (n - 1).leading_zeros() };
    let levels = ceil_log2.max(1);
    let mut graph = Graph::empty(0);
    let mut tiers = Vec::new();
    for i in 0..=levels {
        let tier_size = 2u32.pow(i);
        let copies = if i == 0 { 2 * n } else { (n + tier_size / 2 - 1) / (tier_size / 2) };
        let artifact = builder(tier_size)?;
        let mut offsets = Vec::new();
        for _ in 0..copies {
            if graph.n() + artifact.graph.n() > cap {
                return Err(UniversalError::VertexCapExceeded {
                    needed: (graph.n() + artifact.graph.n()) as u128,
                    cap,
                });
            }
            offsets.push(graph.n() as u32);
            graph = graph.disjoint_union(&artifact.graph);
        }
        tiers.push((tier_size, offsets, artifact));
    }
    Ok(UnionHost { graph, tiers })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ugraph_core::Mode;

    #[test]
    fn blowup_examples() {
        // K_2 blown up by 2 is C_4
        let c4 = blowup(&Graph::complete(2), 2);
        assert_eq!(c4.n(), 4);
        assert_eq!(c4.edge_count(), 4);
        assert!(ugraph_core::are_isomorphic(&c4, &Graph::cycle(4)).unwrap());
        // identity blow-up
        let g = Graph::path(4);
        assert_eq!(blowup(&g, 1), g);
        // P_3 with t = 2: 6 vertices, 2 * 4 = 8 edges
        let b = blowup(&Graph::path(3), 2);
        assert_eq!((b.n(), b.edge_count()), (6, 8));
    }

    #[test]
    fn universal_vertex_examples() {
        assert_eq!(add_universal_vertices(&Graph::empty(0), 3), Graph::complete(3));
        let w4 = add_universal_vertices(&Graph::cycle(4), 1);
        assert_eq!((w4.n(), w4.edge_count()), (5, 8));
        assert_eq!(w4.degree(4), 4);
        let g = add_universal_vertices(&Graph::path(3), 2);
        assert_eq!((g.n(), g.edge_count()), (5, 9));
    }

    #[test]
    fn lift_sizes() {
        // K_2: blocks of size 1 and 2
        let l = sub_to_induced_lift(&Graph::complete(2), 1, 100).unwrap();
        assert_eq!(l.graph.n(), 3);
        // triangle: 1 + 2 + 4 = 7
        let l = sub_to_induced_lift(&Graph::complete(3), 2, 100).unwrap();
        assert_eq!(l.graph.n(), 7);
        // edgeless graph lifts to itself
        let g = Graph::empty(4);
        let l = sub_to_induced_lift(&g, 0, 100).unwrap();
        assert_eq!(l.graph, g);
        // degeneracy violations are flagged
        assert!(matches!(
            sub_to_induced_lift(&Graph::complete(3), 1, 100),
            Err(UniversalError::DegeneracyViolation { .. })
        ));
    }

    #[test]
    fn lift_is_inside_the_blowup() {
        for g in [Graph::path(4), Graph::cycle(5), Graph::complete(3)] {
            let (_, d) = degeneracy_order(&g);
            let l = sub_to_induced_lift(&g, d, 10_000).unwrap();
            let b = blowup(&g, 1 << d);
            // natural inclusion: member j of block v -> blow-up slot v*2^d + j
            for (x, y) in l.graph.edges() {
                let locate = |z: u32| {
                    let v = (0..g.n() as u32)
                        .rfind(|&v| l.meta.offset[v as usize] <= z
                            && z < l.meta.offset[v as usize] + l.meta.block_size[v as usize])
                        .unwrap();
                    v * (1 << d) + (z - l.meta.offset[v as usize])
                };
                assert!(b.has_edge(locate(x), locate(y)));
            }
        }
    }

    #[test]
    fn union_host_layout() {
        let builder = |size: u32| {
            crate::treedepth::build_treedepth_universal(size.max(1), 2, 10_000)
        };
        let uh = disconnected_lift(builder, 1, 10_000).unwrap();
        // i = 0: 2 copies of builder(1); i = 1 (incl.): 1 copy of builder(2)
        assert_eq!(uh.tiers.len(), 2);
        assert_eq!(uh.tiers[0].1.len(), 2);
        assert_eq!(uh.tiers[1].1.len(), 1);
        assert_eq!(uh.tiers[0].2.mode, Mode::Subgraph);
    }
}
