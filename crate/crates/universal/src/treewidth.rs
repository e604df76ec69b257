//! Treewidth-universal host built as a "universal tree-decomposition":
//! a bag skeleton of fixed bag size L and bounded depth in which every bag
//! spawns, per subset S of its vertices (and, in induced mode, per
//! isomorphism class of bag patterns extending the edges already fixed on
//! S), two child bags sharing exactly S and padding with fresh vertices.
//!
//! Subgraph mode makes every bag a clique. Induced mode realizes, for each
//! (S, pattern) choice, the prescribed induced subgraph on the bag; edges
//! between already-created vertices are never altered.

use crate::artifact::{ArtifactMeta, ClassKind, UniversalArtifact};
use crate::error::{Result, UniversalError};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};
use ugraph_core::{Graph, Mode};
use ugraph_decomp::TreeDecomposition;

/// Largest bag size for which induced-mode pattern enumeration is viable.
pub const MAX_INDUCED_BAG_SIZE: u32 = 6;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SkeletonBag {
    /// Sorted global vertex ids; the first `shared` of them are inherited
    /// from the parent bag.
    pub vertices: Vec<u32>,
    pub shared: u32,
    pub parent: Option<u32>,
    pub level: u32,
    /// Adjacency bits among bag positions: pair (i, j), i < j, at bit
    /// j(j-1)/2 + i.
    pub pattern: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TreewidthMeta {
    pub bag_size: u32,
    pub levels: u32,
    pub roots: Vec<u32>,
    pub bags: Vec<SkeletonBag>,
    pub children: Vec<Vec<u32>>,
    pub c_constant: f64,
}

#[derive(Clone, Copy, Debug)]
pub struct TreewidthParams {
    pub bag_size: Option<u32>,
    pub levels: Option<u32>,
    pub cap: usize,
}

impl Default for TreewidthParams {
    fn default() -> Self {
        TreewidthParams { bag_size: None, levels: None, cap: crate::error::DEFAULT_VERTEX_CAP }
    }
}

pub fn pattern_bit(i: usize, j: usize) -> u64 {
    debug_assert!(i < j);
    1u64 << (j * (j - 1) / 2 + i)
}

fn complete_pattern(l: usize) -> u64 {
    (1u64 << (l * (l - 1) / 2)) - 1
}

/// Apply a permutation of positions to a pattern.
fn remap_pattern(pattern: u64, perm: &[usize]) -> u64 {
    let l = perm.len();
    let mut out = 0u64;
    for j in 1..l {
        for i in 0..j {
            if pattern & pattern_bit(i, j) != 0 {
                let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
                out |= pattern_bit(a, b);
            }
        }
    }
    out
}

fn permutations_of(range: std::ops::Range<usize>) -> Vec<Vec<usize>> {
    let items: Vec<usize> = range.collect();
    let mut out = Vec::new();
    fn rec(items: &[usize], cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == items.len() {
            out.push(cur.clone());
            return;
        }
        for (i, &x) in items.iter().enumerate() {
            if !used[i] {
                used[i] = true;
                cur.push(x);
                rec(items, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(&items, &mut Vec::new(), &mut vec![false; items.len()], &mut out);
    out
}

/// All patterns on `l` positions that agree with `fixed` on pairs within
/// the first `s` positions, one representative per class under
/// permutations of the free positions s..l. Deterministic ascending order.
fn extension_classes(l: usize, s: usize, fixed: u64) -> Vec<u64> {
    let mut free_pairs = Vec::new();
    for j in 1..l {
        for i in 0..j {
            if j >= s {
                free_pairs.push((i, j));
            }
        }
    }
    let perms: Vec<Vec<usize>> = permutations_of(s..l)
        .into_iter()
        .map(|tail| {
            let mut perm: Vec<usize> = (0..s).collect();
            perm.extend(tail);
            perm
        })
        .collect();
    let mut classes = BTreeSet::new();
    for bits in 0u64..(1u64 << free_pairs.len()) {
        let mut pattern = fixed;
        for (idx, &(i, j)) in free_pairs.iter().enumerate() {
            if bits >> idx & 1 == 1 {
                pattern |= pattern_bit(i, j);
            }
        }
        let canon = perms.iter().map(|p| remap_pattern(pattern, p)).min().unwrap();
        classes.insert(canon);
    }
    classes.into_iter().collect()
}

pub fn build_treewidth_universal(
    n: u32,
    k: u32,
    mode: Mode,
    params: TreewidthParams,
) -> Result<UniversalArtifact> {
    if n == 0 || k == 0 {
        return Err(UniversalError::BadParameter(format!(
            "treewidth universal needs n >= 1 and k >= 1, got n={n}, k={k}"
        )));
    }
    let l = params.bag_size.unwrap_or(3 * k + 2);
    if l == 0 || l > 11 {
        return Err(UniversalError::BadParameter(format!("bag size {l} out of range 1..=11")));
    }
    if mode == Mode::Induced && l > MAX_INDUCED_BAG_SIZE {
        return Err(UniversalError::BadParameter(format!(
            "induced-mode pattern enumeration is viable only up to bag size {MAX_INDUCED_BAG_SIZE}, got {l}"
        )));
    }
    let levels = params.levels.unwrap_or_else(|| {
        (ugraph_decomp::LOG_DEPTH_C * (n.max(2) as f64).log2()).ceil() as u32 + 1
    });
    if levels == 0 {
        return Err(UniversalError::BadParameter("levels must be >= 1".into()));
    }
    let cap = params.cap;
    let lu = l as usize;

    let mut ext_cache: HashMap<(usize, u64), Vec<u64>> = HashMap::new();
    let mut cached_classes = |s: usize, fixed: u64| -> Vec<u64> {
        ext_cache.entry((s, fixed)).or_insert_with(|| extension_classes(lu, s, fixed)).clone()
    };

    let mut bags: Vec<SkeletonBag> = Vec::new();
    let mut children: Vec<Vec<u32>> = Vec::new();
    let mut roots = Vec::new();
    let mut next_vertex: u64 = 0;
    let mut edges: Vec<(u32, u32)> = Vec::new();

    let root_patterns: Vec<u64> = match mode {
        Mode::Subgraph => vec![complete_pattern(lu)],
        Mode::Induced => cached_classes(0, 0),
    };
    for pattern in root_patterns {
        let vertices: Vec<u32> = (next_vertex..next_vertex + l as u64).map(|v| v as u32).collect();
        next_vertex += l as u64;
        if next_vertex > cap as u64 {
            return Err(UniversalError::VertexCapExceeded { needed: next_vertex as u128, cap });
        }
        push_bag_edges(&vertices, pattern, 0, &mut edges);
        roots.push(bags.len() as u32);
        bags.push(SkeletonBag { vertices, shared: 0, parent: None, level: 1, pattern });
        children.push(Vec::new());
    }

    let mut frontier: Vec<u32> = roots.clone();
    for level in 2..=levels {
        let mut next_frontier = Vec::new();
        for &bag_id in &frontier {
            let parent_bag = bags[bag_id as usize].clone();
            for subset in 0u32..(1u32 << l) {
                let s = subset.count_ones() as usize;
                let shared: Vec<u32> = (0..lu)
                    .filter(|&p| subset >> p & 1 == 1)
                    .map(|p| parent_bag.vertices[p])
                    .collect();
                // pattern fixed on the shared part, re-indexed to 0..s
                let positions: Vec<usize> = (0..lu).filter(|&p| subset >> p & 1 == 1).collect();
                let mut fixed = 0u64;
                for b in 1..s {
                    for a in 0..b {
                        let (pa, pb) = (positions[a], positions[b]);
                        if parent_bag.pattern & pattern_bit(pa.min(pb), pa.max(pb)) != 0 {
                            fixed |= pattern_bit(a, b);
                        }
                    }
                }
                let child_patterns: Vec<u64> = match mode {
                    Mode::Subgraph => vec![complete_pattern(lu)],
                    Mode::Induced => cached_classes(s, fixed),
                };
                for pattern in child_patterns {
                    for _twin in 0..2 {
                        let mut vertices = shared.clone();
                        for _ in s..lu {
                            vertices.push(next_vertex as u32);
                            next_vertex += 1;
                        }
                        if next_vertex > cap as u64 || bags.len() >= cap {
                            return Err(UniversalError::VertexCapExceeded {
                                needed: next_vertex as u128,
                                cap,
                            });
                        }
                        push_bag_edges(&vertices, pattern, s, &mut edges);
                        let child_id = bags.len() as u32;
                        bags.push(SkeletonBag {
                            vertices,
                            shared: s as u32,
                            parent: Some(bag_id),
                            level,
                            pattern,
                        });
                        children.push(Vec::new());
                        children[bag_id as usize].push(child_id);
                        next_frontier.push(child_id);
                    }
                }
            }
        }
        frontier = next_frontier;
    }

    let graph = Graph::from_edges(next_vertex as usize, edges)?;
    Ok(UniversalArtifact {
        graph,
        class_kind: ClassKind::Treewidth,
        k,
        n,
        mode,
        meta: ArtifactMeta::Treewidth(TreewidthMeta {
            bag_size: l,
            levels,
            roots,
            bags,
            children,
            c_constant: ugraph_decomp::LOG_DEPTH_C,
        }),
    })
}

/// Emit the bag's pattern edges, skipping pairs inside the shared prefix
/// (those were created by an ancestor bag).
fn push_bag_edges(vertices: &[u32], pattern: u64, shared: usize, edges: &mut Vec<(u32, u32)>) {
    let l = vertices.len();
    for j in 1..l {
        for i in 0..j {
            if j < shared {
                continue;
            }
            if pattern & pattern_bit(i, j) != 0 {
                edges.push((vertices[i], vertices[j]));
            }
        }
    }
}

/// The skeleton as a tree-decomposition (roots chained so the witness is a
/// single tree); width = bag size - 1.
pub fn witness(meta: &TreewidthMeta) -> TreeDecomposition {
    let mut edges: Vec<(usize, usize)> = meta
        .bags
        .iter()
        .enumerate()
        .filter_map(|(i, b)| b.parent.map(|p| (p as usize, i)))
        .collect();
    for pair in meta.roots.windows(2) {
        edges.push((pair[0] as usize, pair[1] as usize));
    }
    TreeDecomposition {
        bags: meta.bags.iter().map(|b| b.vertices.clone()).collect(),
        edges,
        root: meta.roots.first().map(|&r| r as usize),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ugraph_decomp::validate_tree;

    fn meta(a: &UniversalArtifact) -> &TreewidthMeta {
        match &a.meta {
            ArtifactMeta::Treewidth(m) => m,
            _ => unreachable!(),
        }
    }

    #[test]
    fn single_level_subgraph_is_a_clique() {
        let a = build_treewidth_universal(
            4,
            1,
            Mode::Subgraph,
            TreewidthParams { bag_size: Some(4), levels: Some(1), cap: 1000 },
        )
        .unwrap();
        assert_eq!(a.graph, Graph::complete(4));
        assert_eq!(meta(&a).roots.len(), 1);
    }

    #[test]
    fn two_level_subgraph_counts() {
        let l = 3u32;
        let a = build_treewidth_universal(
            3,
            1,
            Mode::Subgraph,
            TreewidthParams { bag_size: Some(l), levels: Some(2), cap: 100_000 },
        )
        .unwrap();
        let m = meta(&a);
        // 1 root + 2 children per subset of the root bag
        assert_eq!(m.bags.len(), 1 + 2 * (1 << l) as usize);
        let w = witness(m);
        assert_eq!(validate_tree(&w, &a.graph), Ok(()));
        assert_eq!(w.width() as u32, l - 1);
    }

    #[test]
    fn induced_roots_cover_all_small_patterns() {
        let a = build_treewidth_universal(
            3,
            1,
            Mode::Induced,
            TreewidthParams { bag_size: Some(3), levels: Some(1), cap: 1000 },
        )
        .unwrap();
        // 4 graphs on 3 vertices up to isomorphism
        assert_eq!(meta(&a).roots.len(), 4);
        let w = witness(meta(&a));
        assert_eq!(validate_tree(&w, &a.graph), Ok(()));
    }

    #[test]
    fn induced_mode_guards_pattern_explosion() {
        let r = build_treewidth_universal(
            4,
            2,
            Mode::Induced,
            TreewidthParams { bag_size: Some(8), levels: Some(2), cap: 10_000 },
        );
        assert!(matches!(r, Err(UniversalError::BadParameter(_))));
    }

    #[test]
    fn extension_class_sanity() {
        // all graphs on 4 vertices up to isomorphism: 11
        assert_eq!(extension_classes(4, 0, 0).len(), 11);
        // fixing the whole bag leaves exactly one pattern
        let full = complete_pattern(4);
        assert_eq!(extension_classes(4, 4, full), vec![full]);
    }
}
