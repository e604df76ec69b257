//! Treedepth-universal host: the transitive closure of the complete n-ary
//! rooted tree of depth k. Size (n^k - 1)/(n - 1) for n >= 2, k for n = 1.

use crate::artifact::{ArtifactMeta, ClassKind, TreedepthMeta, UniversalArtifact};
use crate::error::{Result, UniversalError};
use ugraph_core::{Graph, Mode};

/// Number of vertices of the host tree, as a u128 to survive cap checks.
pub fn treedepth_host_size(n: u32, k: u32) -> u128 {
    let n = n as u128;
    let mut total: u128 = 0;
    let mut level: u128 = 1;
    for _ in 0..k {
        total += level;
        level = level.saturating_mul(n);
    }
    total
}

pub fn build_treedepth_universal(n: u32, k: u32, cap: usize) -> Result<UniversalArtifact> {
    if n == 0 || k == 0 {
        return Err(UniversalError::BadParameter(format!(
            "treedepth universal needs n >= 1 and k >= 1, got n={n}, k={k}"
        )));
    }
    let size = treedepth_host_size(n, k);
    if size > cap as u128 {
        return Err(UniversalError::VertexCapExceeded { needed: size, cap });
    }
    let size = size as usize;
    // breadth-first layout: root 0, then each node's n children in order
    let mut parent: Vec<Option<u32>> = vec![None; size];
    let mut level: Vec<u32> = vec![0; size];
    let mut children: Vec<Vec<u32>> = vec![Vec::new(); size];
    level[0] = 1;
    let mut next = 1usize;
    for v in 0..size {
        if level[v] < k {
            for _ in 0..n {
                parent[next] = Some(v as u32);
                level[next] = level[v] + 1;
                children[v].push(next as u32);
                next += 1;
            }
        }
    }
    debug_assert_eq!(next, size);
    // transitive closure: each node is adjacent to all its ancestors
    let mut edges = Vec::new();
    for v in 1..size as u32 {
        let mut anc = parent[v as usize];
        while let Some(a) = anc {
            edges.push((a, v));
            anc = parent[a as usize];
        }
    }
    let graph = Graph::from_edges(size, edges)?;
    Ok(UniversalArtifact {
        graph,
        class_kind: ClassKind::Treedepth,
        k,
        n,
        mode: Mode::Subgraph,
        meta: ArtifactMeta::Treedepth(TreedepthMeta { arity: n, depth: k, parent, children, level }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ugraph_decomp::{validate, Decomposition};

    #[test]
    fn size_formula() {
        assert_eq!(treedepth_host_size(3, 2), 4);
        assert_eq!(treedepth_host_size(2, 3), 7);
        assert_eq!(treedepth_host_size(5, 2), 6);
        assert_eq!(treedepth_host_size(4, 3), 21);
        assert_eq!(treedepth_host_size(7, 1), 1);
        // (n^k - 1) / (n - 1) closed form for n >= 2
        for n in 2u32..6 {
            for k in 1u32..5 {
                let closed = ((n as u128).pow(k) - 1) / (n as u128 - 1);
                assert_eq!(treedepth_host_size(n, k), closed);
            }
        }
    }

    #[test]
    fn n3_k2_is_the_star() {
        let a = build_treedepth_universal(3, 2, 1000).unwrap();
        assert_eq!(a.graph.n(), 4);
        assert_eq!(a.graph.edge_count(), 3);
        assert_eq!(a.graph.degree(0), 3);
    }

    #[test]
    fn binary_depth3_closure_has_10_edges() {
        let a = build_treedepth_universal(2, 3, 1000).unwrap();
        assert_eq!(a.graph.n(), 7);
        assert_eq!(a.graph.edge_count(), 10);
        // witness is an elimination forest of depth k
        let w = a.witness();
        assert_eq!(validate(&w, &a.graph), Ok(()));
        match w {
            Decomposition::Elimination(f) => assert_eq!(f.depth(), Some(3)),
            _ => panic!("wrong witness kind"),
        }
    }

    #[test]
    fn k1_is_a_single_vertex() {
        let a = build_treedepth_universal(5, 1, 10).unwrap();
        assert_eq!(a.graph.n(), 1);
        assert_eq!(a.graph.edge_count(), 0);
    }

    #[test]
    fn cap_guard() {
        assert!(matches!(
            build_treedepth_universal(10, 9, 1000),
            Err(UniversalError::VertexCapExceeded { .. })
        ));
    }
}
