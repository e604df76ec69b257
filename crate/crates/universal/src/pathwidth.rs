//! Pathwidth-universal host, built by recursion on k.
//!
//! k = 1: a path on n spine vertices with n-1 pendant leaves each (n^2
//! vertices). Small n: a clique. Otherwise: blocks S_1..S_{n-1} of k fresh
//! vertices (consecutive blocks fully joined, each block a clique) and n-2
//! copies of the (k-1, n-1) host, copy i fully joined to S_i and S_{i+1}.
//! The host's own pathwidth is at most k^2 + k - 1.

use crate::artifact::{ArtifactMeta, ClassKind, UniversalArtifact};
use crate::error::{Result, UniversalError};
use serde::{Deserialize, Serialize};
use ugraph_core::{Graph, Mode};
use ugraph_decomp::PathDecomposition;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "layout", rename_all = "lowercase")]
pub enum PathwidthLayout {
    /// Spine vertex i at index i; pendants of spine i at n + i(n-1) ...
    Caterpillar { n: u32 },
    Clique { n: u32, k: u32 },
    /// S_i (1-based) occupies [(i-1)k, ik); copy i (1-based) starts at
    /// (n-1)k + (i-1) * sub_size.
    Recursive { k: u32, n: u32, sub_size: u32, sub: Box<PathwidthLayout> },
}

impl PathwidthLayout {
    pub fn size(&self) -> u32 {
        match self {
            PathwidthLayout::Caterpillar { n } => n * n,
            PathwidthLayout::Clique { n, .. } => *n,
            PathwidthLayout::Recursive { k, n, sub_size, .. } => {
                (n - 1) * k + (n - 2) * sub_size
            }
        }
    }
}

/// Host size by the construction's recurrence.
pub fn pathwidth_host_size(n: u32, k: u32) -> u128 {
    if k == 1 {
        (n as u128) * (n as u128)
    } else if n + 1 <= k * (k + 1) {
        // clique branch: n <= k^2 + k - 1
        n as u128
    } else {
        (n as u128 - 1) * k as u128 + (n as u128 - 2) * pathwidth_host_size(n - 1, k - 1)
    }
}

fn build_layout(n: u32, k: u32, cap: usize) -> Result<(Graph, PathwidthLayout)> {
    let size = pathwidth_host_size(n, k);
    if size > cap as u128 {
        return Err(UniversalError::VertexCapExceeded { needed: size, cap });
    }
    if k == 1 {
        let n_us = n as usize;
        let mut edges = Vec::new();
        for i in 1..n {
            edges.push((i - 1, i));
        }
        for i in 0..n {
            let base = n + i * (n - 1);
            for p in 0..(n - 1) {
                edges.push((i, base + p));
            }
        }
        let graph = Graph::from_edges(n_us * n_us, edges)?;
        return Ok((graph, PathwidthLayout::Caterpillar { n }));
    }
    if n + 1 <= k * (k + 1) {
        return Ok((Graph::complete(n as usize), PathwidthLayout::Clique { n, k }));
    }
    let (sub_graph, sub_layout) = build_layout(n - 1, k - 1, cap)?;
    let sub_size = sub_graph.n() as u32;
    let s_total = (n - 1) * k;
    let block = |i: u32| (i - 1) * k..i * k; // S_i, 1-based
    let mut edges = Vec::new();
    for i in 1..n {
        // clique on S_i
        for a in block(i) {
            for b in (a + 1)..i * k {
                edges.push((a, b));
            }
        }
        // complete join S_i .. S_{i+1}
        if i + 1 < n {
            for a in block(i) {
                for b in block(i + 1) {
                    edges.push((a, b));
                }
            }
        }
    }
    for c in 1..=(n - 2) {
        let off = s_total + (c - 1) * sub_size;
        for (u, v) in sub_graph.edges() {
            edges.push((off + u, off + v));
        }
        for local in 0..sub_size {
            for a in block(c).chain(block(c + 1)) {
                edges.push((a, off + local));
            }
        }
    }
    let graph = Graph::from_edges(size as usize, edges)?;
    Ok((graph, PathwidthLayout::Recursive { k, n, sub_size, sub: Box::new(sub_layout) }))
}

pub fn build_pathwidth_universal(n: u32, k: u32, cap: usize) -> Result<UniversalArtifact> {
    if n == 0 || k == 0 {
        return Err(UniversalError::BadParameter(format!(
            "pathwidth universal needs n >= 1 and k >= 1, got n={n}, k={k}"
        )));
    }
    let (graph, layout) = build_layout(n, k, cap)?;
    debug_assert_eq!(graph.n() as u128, pathwidth_host_size(n, k));
    Ok(UniversalArtifact {
        graph,
        class_kind: ClassKind::Pathwidth,
        k,
        n,
        mode: Mode::Subgraph,
        meta: ArtifactMeta::Pathwidth(layout),
    })
}

/// Path-decomposition of the host of width at most k^2 + k - 1, assembled
/// exactly as the construction promises: bags S_i + S_{i+1} + (sub bag).
pub fn witness(layout: &PathwidthLayout) -> PathDecomposition {
    match layout {
        PathwidthLayout::Caterpillar { n } => {
            let n = *n;
            let mut bags = Vec::new();
            for i in 0..n {
                let base = n + i * (n - 1);
                for p in 0..(n - 1) {
                    bags.push(vec![i, base + p]);
                }
                if i + 1 < n {
                    bags.push(vec![i, i + 1]);
                }
            }
            if bags.is_empty() {
                bags.push(vec![0]); // n = 1: a single spine vertex
            }
            PathDecomposition::new(bags)
        }
        PathwidthLayout::Clique { n, .. } => {
            PathDecomposition::new(vec![(0..*n).collect()])
        }
        PathwidthLayout::Recursive { k, n, sub_size, sub } => {
            let sub_witness = witness(sub);
            let s_total = (n - 1) * k;
            let mut bags = Vec::new();
            for c in 1..=(n - 2) {
                let off = s_total + (c - 1) * sub_size;
                let mut frame: Vec<u32> = ((c - 1) * k..(c + 1) * k).collect();
                frame.sort_unstable();
                for sub_bag in &sub_witness.bags {
                    let mut bag = frame.clone();
                    bag.extend(sub_bag.iter().map(|v| off + v));
                    bags.push(bag);
                }
            }
            PathDecomposition::new(bags)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ugraph_decomp::{exact_pathwidth, validate_path};

    #[test]
    fn sizes() {
        assert_eq!(pathwidth_host_size(3, 1), 9);
        assert_eq!(pathwidth_host_size(5, 1), 25);
        assert_eq!(pathwidth_host_size(6, 2), 110);
        assert_eq!(pathwidth_host_size(7, 2), 6 * 2 + 5 * 36);
        // bounded by n^{k+1}
        for k in 1..=3u32 {
            for n in 1..=12u32 {
                assert!(pathwidth_host_size(n, k) <= (n as u128).pow(k + 1), "n={n}, k={k}");
            }
        }
    }

    #[test]
    fn caterpillar_structure() {
        let a = build_pathwidth_universal(3, 1, 100).unwrap();
        assert_eq!(a.graph.n(), 9);
        // spine of 3, each with 2 pendants
        assert_eq!(a.graph.degree(1), 4); // middle spine: 2 spine + 2 pendants
        let w = witness(match &a.meta {
            ArtifactMeta::Pathwidth(l) => l,
            _ => unreachable!(),
        });
        assert_eq!(validate_path(&w, &a.graph), Ok(()));
        assert_eq!(w.width(), 1);
    }

    #[test]
    fn recursive_host_is_certified() {
        let a = build_pathwidth_universal(6, 2, 10_000).unwrap();
        assert_eq!(a.graph.n(), 110);
        let layout = match &a.meta {
            ArtifactMeta::Pathwidth(l) => l,
            _ => unreachable!(),
        };
        let w = witness(layout);
        assert_eq!(validate_path(&w, &a.graph), Ok(()));
        assert!(w.width() <= 5, "width {} over k^2+k-1", w.width());
    }

    #[test]
    fn caterpillar_has_exact_pathwidth_1() {
        let a = build_pathwidth_universal(3, 1, 100).unwrap();
        let (pw, _) = exact_pathwidth(&a.graph).unwrap();
        assert_eq!(pw, 1);
    }

    #[test]
    fn clique_branch() {
        let a = build_pathwidth_universal(5, 2, 100).unwrap();
        assert_eq!(a.graph, Graph::complete(5));
    }
}
