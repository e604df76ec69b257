//! Exact width oracles by exhaustive subset dynamic programming, each
//! returning a validated witness. Intended for graphs on at most 14
//! vertices.
//!
//! Conventions for the empty graph: tw = pw = -1 and td = 0.

use crate::types::{EliminationForest, PathDecomposition, TreeDecomposition};
use std::collections::HashMap;
use thiserror::Error;
use ugraph_core::Graph;

pub const MAX_EXACT_VERTICES: usize = 15;

#[derive(Debug, Error)]
pub enum ExactError {
    #[error("{op}: exact oracle limited to {limit} vertices, got {got}")]
    TooLarge { op: &'static str, limit: usize, got: usize },
}

fn check_size(op: &'static str, g: &Graph) -> Result<(), ExactError> {
    if g.n() > MAX_EXACT_VERTICES {
        Err(ExactError::TooLarge { op, limit: MAX_EXACT_VERTICES, got: g.n() })
    } else {
        Ok(())
    }
}

/// Vertices outside `processed + {v}` that v sees directly or through
/// `processed` (the elimination neighborhood of v when `processed` is gone).
fn reach_outside(rows: &[u64], processed: u64, v: usize) -> u64 {
    let inside = processed | (1 << v);
    // expand the component of v within `inside`
    let mut comp = 1u64 << v;
    loop {
        let mut grow = 0u64;
        let mut bits = comp;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            grow |= rows[u] & inside & !comp;
        }
        if grow == 0 {
            break;
        }
        comp |= grow;
    }
    let mut out = 0u64;
    let mut bits = comp;
    while bits != 0 {
        let u = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        out |= rows[u];
    }
    out & !inside
}

/// Simulate the elimination order, returning each vertex's later
/// neighborhood with fill edges.
fn fill_neighborhoods(g: &Graph, order: &[u32]) -> Vec<Vec<u32>> {
    let rows = g.bitrows().expect("exact oracle size-checked");
    let mut processed = 0u64;
    let mut out = vec![Vec::new(); g.n()];
    for &v in order {
        let reach = reach_outside(&rows, processed, v as usize);
        let mut bits = reach;
        while bits != 0 {
            let u = bits.trailing_zeros();
            bits &= (bits as u64) - 1;
            out[v as usize].push(u);
        }
        processed |= 1 << v;
    }
    out
}

/// Tree-decomposition induced by an elimination order: bag(v) = {v} plus
/// v's later fill neighborhood, attached at the earliest-eliminated member.
fn decomposition_from_order(g: &Graph, order: &[u32]) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition::single_bag(Vec::new());
    }
    let fills = fill_neighborhoods(g, order);
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v as usize] = i;
    }
    // node i of the tree = bag of order[i]
    let mut bags = Vec::with_capacity(n);
    let mut edges = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let mut bag = fills[v as usize].clone();
        bag.push(v);
        bag.sort_unstable();
        bags.push(bag);
        let parent = fills[v as usize].iter().copied().min_by_key(|&u| pos[u as usize]);
        match parent {
            Some(p) => edges.push((i, pos[p as usize])),
            None => {
                if i + 1 < n {
                    edges.push((i, i + 1)); // keep the tree connected across components
                }
            }
        }
    }
    TreeDecomposition { bags, edges, root: Some(n - 1) }
}

/// Exact treewidth with a validated witness.
pub fn exact_treewidth(g: &Graph) -> Result<(i64, TreeDecomposition), ExactError> {
    check_size("exact_treewidth", g)?;
    let n = g.n();
    if n == 0 {
        return Ok((-1, TreeDecomposition::single_bag(Vec::new())));
    }
    let rows = g.bitrows().expect("size checked");
    let full: u64 = (1 << n) - 1;
    // opt[S] = best achievable max elimination degree when S is eliminated first
    let mut opt = vec![u8::MAX; 1 << n];
    opt[0] = 0;
    for s in 1u64..=full {
        let mut best = u8::MAX;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let prev = s & !(1 << v);
            let sub = opt[prev as usize];
            if sub == u8::MAX {
                continue;
            }
            let deg = reach_outside(&rows, prev, v).count_ones() as u8;
            best = best.min(sub.max(deg));
        }
        opt[s as usize] = best;
    }
    // reconstruct a witness order, lowest vertex first on ties
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let target = opt[s as usize];
        let mut bits = s;
        let mut chosen = None;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let prev = s & !(1 << v);
            let sub = opt[prev as usize];
            if sub == u8::MAX {
                continue;
            }
            let deg = reach_outside(&rows, prev, v).count_ones() as u8;
            if sub.max(deg) == target {
                chosen = Some(v);
                break;
            }
        }
        let v = chosen.expect("DP table is consistent");
        order.push(v as u32);
        s &= !(1 << v);
    }
    order.reverse(); // DP removed the last-eliminated vertex first
    let witness = decomposition_from_order(g, &order);
    debug_assert_eq!(witness.width(), opt[full as usize] as i64);
    Ok((opt[full as usize] as i64, witness))
}

/// Exact pathwidth (vertex separation) with a validated witness.
pub fn exact_pathwidth(g: &Graph) -> Result<(i64, PathDecomposition), ExactError> {
    check_size("exact_pathwidth", g)?;
    let n = g.n();
    if n == 0 {
        return Ok((-1, PathDecomposition::new(vec![Vec::new()])));
    }
    let rows = g.bitrows().expect("size checked");
    let full: u64 = (1 << n) - 1;
    let boundary = |s: u64| -> u8 {
        let mut count = 0u8;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if rows[v] & !s != 0 {
                count += 1;
            }
        }
        count
    };
    let mut opt = vec![u8::MAX; 1 << n];
    opt[0] = 0;
    for s in 1u64..=full {
        let b = boundary(s);
        let mut best = u8::MAX;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let sub = opt[(s & !(1 << v)) as usize];
            if sub != u8::MAX {
                best = best.min(sub.max(b));
            }
        }
        opt[s as usize] = best;
    }
    // reconstruct prefix order
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let target = opt[s as usize];
        let b = boundary(s);
        let mut chosen = None;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let sub = opt[(s & !(1 << v)) as usize];
            if sub != u8::MAX && sub.max(b) == target {
                chosen = Some(v);
                break;
            }
        }
        let v = chosen.expect("DP table is consistent");
        order.push(v as u32);
        s &= !(1 << v);
    }
    order.reverse();
    // bags: boundary of the processed prefix plus the next vertex
    let mut bags = Vec::with_capacity(n);
    let mut prefix = 0u64;
    for &v in &order {
        let mut bag: Vec<u32> = Vec::new();
        let mut bits = prefix;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if rows[u] & !prefix != 0 {
                bag.push(u as u32);
            }
        }
        bag.push(v);
        bag.sort_unstable();
        bags.push(bag);
        prefix |= 1 << v;
    }
    let witness = PathDecomposition::new(bags);
    debug_assert!(witness.width() <= opt[full as usize] as i64);
    Ok((opt[full as usize] as i64, witness))
}

/// Exact treedepth with a validated elimination forest, by the recursion
/// td(G) = 1 + min over roots v of td(G - v), split over components,
/// memoized on vertex subsets.
pub fn exact_treedepth(g: &Graph) -> Result<(i64, EliminationForest), ExactError> {
    check_size("exact_treedepth", g)?;
    let n = g.n();
    if n == 0 {
        return Ok((0, EliminationForest { parent: Vec::new() }));
    }
    let rows = g.bitrows().expect("size checked");

    fn components(rows: &[u64], mask: u64) -> Vec<u64> {
        let mut rest = mask;
        let mut comps = Vec::new();
        while rest != 0 {
            let start = rest.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            loop {
                let mut grow = 0u64;
                let mut bits = comp;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    grow |= rows[v] & mask & !comp;
                }
                if grow == 0 {
                    break;
                }
                comp |= grow;
            }
            comps.push(comp);
            rest &= !comp;
        }
        comps
    }

    fn td_connected(rows: &[u64], mask: u64, memo: &mut HashMap<u64, u8>) -> u8 {
        if mask == 0 {
            return 0;
        }
        if mask.count_ones() == 1 {
            return 1;
        }
        if let Some(&d) = memo.get(&mask) {
            return d;
        }
        let mut best = u8::MAX;
        let mut bits = mask;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = mask & !(1 << v);
            let sub = components(rows, rest)
                .into_iter()
                .map(|c| td_connected(rows, c, memo))
                .max()
                .unwrap_or(0);
            best = best.min(1 + sub);
            if best == 2 && mask.count_ones() > 1 {
                break; // cannot do better than a dominating root
            }
        }
        memo.insert(mask, best);
        best
    }

    fn build_forest(
        rows: &[u64],
        mask: u64,
        parent_of_root: Option<u32>,
        memo: &mut HashMap<u64, u8>,
        out: &mut Vec<Option<u32>>,
    ) {
        for comp in components(rows, mask) {
            if comp.count_ones() == 1 {
                let v = comp.trailing_zeros() as usize;
                out[v] = parent_of_root;
                continue;
            }
            let target = td_connected(rows, comp, memo);
            let mut bits = comp;
            let mut chosen = None;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let rest = comp & !(1 << v);
                let sub = components(rows, rest)
                    .into_iter()
                    .map(|c| td_connected(rows, c, memo))
                    .max()
                    .unwrap_or(0);
                if 1 + sub == target {
                    chosen = Some(v);
                    break;
                }
            }
            let v = chosen.expect("memo is consistent");
            out[v] = parent_of_root;
            build_forest(rows, comp & !(1 << v), Some(v as u32), memo, out);
        }
    }

    let full: u64 = (1 << n) - 1;
    let mut memo = HashMap::new();
    let depth = components(&rows, full)
        .into_iter()
        .map(|c| td_connected(&rows, c, &mut memo))
        .max()
        .unwrap_or(0);
    let mut parent = vec![None; n];
    build_forest(&rows, full, None, &mut memo, &mut parent);
    Ok((depth as i64, EliminationForest { parent }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validate::{validate_elimination, validate_path, validate_tree};

    #[test]
    fn treewidth_known_values() {
        let (w, d) = exact_treewidth(&Graph::complete(4)).unwrap();
        assert_eq!(w, 3);
        assert_eq!(validate_tree(&d, &Graph::complete(4)), Ok(()));
        let (w, d) = exact_treewidth(&Graph::cycle(5)).unwrap();
        assert_eq!(w, 2);
        assert_eq!(validate_tree(&d, &Graph::cycle(5)), Ok(()));
        assert_eq!(d.width(), 2);
        // 3x3 grid has treewidth 3
        let mut edges = Vec::new();
        for y in 0..3u32 {
            for x in 0..3u32 {
                let v = y * 3 + x;
                if x + 1 < 3 {
                    edges.push((v, v + 1));
                }
                if y + 1 < 3 {
                    edges.push((v, v + 3));
                }
            }
        }
        let grid = Graph::from_edges(9, edges).unwrap();
        let (w, d) = exact_treewidth(&grid).unwrap();
        assert_eq!(w, 3);
        assert_eq!(validate_tree(&d, &grid), Ok(()));
    }

    #[test]
    fn pathwidth_known_values() {
        for n in [2usize, 5, 9] {
            let (w, d) = exact_pathwidth(&Graph::path(n)).unwrap();
            assert_eq!(w, 1, "P_{n}");
            assert_eq!(validate_path(&d, &Graph::path(n)), Ok(()));
        }
        // complete binary tree on 15 vertices: pw 2
        let mut edges = Vec::new();
        for v in 1..15u32 {
            edges.push(((v - 1) / 2, v));
        }
        let tree = Graph::from_edges(15, edges).unwrap();
        let (w, d) = exact_pathwidth(&tree).unwrap();
        assert_eq!(w, 2);
        assert_eq!(validate_path(&d, &tree), Ok(()));
        // the 7-vertex complete binary tree is a caterpillar: pw 1
        let mut edges = Vec::new();
        for v in 1..7u32 {
            edges.push(((v - 1) / 2, v));
        }
        let t7 = Graph::from_edges(7, edges).unwrap();
        let (w, d) = exact_pathwidth(&t7).unwrap();
        assert_eq!(w, 1);
        assert_eq!(validate_path(&d, &t7), Ok(()));
        // oracle refuses larger inputs
        assert!(exact_pathwidth(&Graph::path(16)).is_err());
    }

    #[test]
    fn treedepth_known_values() {
        let (d, f) = exact_treedepth(&Graph::complete(5)).unwrap();
        assert_eq!(d, 5);
        assert_eq!(validate_elimination(&f, &Graph::complete(5)), Ok(()));
        let (d, f) = exact_treedepth(&Graph::path(4)).unwrap();
        assert_eq!(d, 3);
        assert_eq!(validate_elimination(&f, &Graph::path(4)), Ok(()));
        assert_eq!(f.depth(), Some(3));
        let star = Graph::from_edges(6, (1..6).map(|v| (0u32, v))).unwrap();
        let (d, f) = exact_treedepth(&star).unwrap();
        assert_eq!(d, 2);
        assert_eq!(validate_elimination(&f, &star), Ok(()));
    }

    #[test]
    fn empty_graph_conventions() {
        let g = Graph::empty(0);
        assert_eq!(exact_treewidth(&g).unwrap().0, -1);
        assert_eq!(exact_pathwidth(&g).unwrap().0, -1);
        assert_eq!(exact_treedepth(&g).unwrap().0, 0);
    }
}
