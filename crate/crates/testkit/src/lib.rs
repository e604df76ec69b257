//! Brute-force reference oracles for tests. Everything here recomputes from
//! first principles (permutations, exhaustive partitions) and deliberately
//! shares no search machinery with the main crates.

use rand::Rng;
use ugraph_core::Graph;

/// All permutations of 0..n, lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = (0..n as u32).collect();
    loop {
        out.push(cur.clone());
        // next_permutation
        let mut i = n.wrapping_sub(1);
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 || n == 0 {
            return out;
        }
        let mut j = n - 1;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// Isomorphism by trying every bijection. n <= 9.
pub fn naive_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    let n = g1.n();
    'outer: for perm in permutations(n) {
        for (u, v) in g1.edges() {
            if !g2.has_edge(perm[u as usize], perm[v as usize]) {
                continue 'outer;
            }
        }
        return true;
    }
    n == 0
}

/// Simulate eliminating vertices in `order`; returns, per vertex, its
/// neighborhood (with fill) among later vertices at elimination time.
fn fill_neighborhoods(g: &Graph, order: &[u32]) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v as usize] = i;
    }
    let mut adj: Vec<std::collections::BTreeSet<u32>> = (0..n)
        .map(|u| g.neighbors(u as u32).iter().copied().collect())
        .collect();
    let mut result = vec![Vec::new(); n];
    for &v in order {
        let nbrs: Vec<u32> = adj[v as usize].iter().copied().collect();
        result[v as usize] = nbrs.clone();
        for (i, &a) in nbrs.iter().enumerate() {
            adj[a as usize].remove(&v);
            for &b in &nbrs[i + 1..] {
                adj[a as usize].insert(b);
                adj[b as usize].insert(a);
            }
        }
        let _ = pos;
        adj[v as usize].clear();
    }
    result
}

/// Treewidth as the minimum over all elimination orderings of the largest
/// elimination neighborhood. n <= 8.
pub fn naive_treewidth(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0; // caller adjusts empty-graph conventions
    }
    let mut best = usize::MAX;
    for order in permutations(g.n()) {
        let fills = fill_neighborhoods(g, &order);
        let width = order.iter().map(|&v| fills[v as usize].len()).max().unwrap();
        best = best.min(width);
    }
    best
}

/// Pathwidth as the vertex separation number: minimum over orderings of the
/// largest boundary of a prefix.
pub fn naive_pathwidth(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let mut best = usize::MAX;
    for order in permutations(g.n()) {
        let mut in_prefix = vec![false; g.n()];
        let mut worst = 0usize;
        for &v in &order {
            in_prefix[v as usize] = true;
            let boundary = (0..g.n() as u32)
                .filter(|&u| {
                    in_prefix[u as usize]
                        && g.neighbors(u).iter().any(|&w| !in_prefix[w as usize])
                })
                .count();
            worst = worst.max(boundary);
        }
        best = best.min(worst);
    }
    best
}

/// Treedepth as the minimum elimination-tree depth over all orderings.
pub fn naive_treedepth(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let n = g.n();
    let mut best = usize::MAX;
    for order in permutations(n) {
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v as usize] = i;
        }
        let fills = fill_neighborhoods(g, &order);
        // parent of v = its earliest-eliminated later neighbor (with fill)
        let mut depth = vec![0usize; n];
        let mut worst = 0usize;
        for &v in order.iter().rev() {
            let parent = fills[v as usize]
                .iter()
                .copied()
                .min_by_key(|&u| pos[u as usize]);
            depth[v as usize] = match parent {
                Some(p) => depth[p as usize] + 1,
                None => 1,
            };
            worst = worst.max(depth[v as usize]);
        }
        best = best.min(worst);
    }
    best
}

/// K_t-minor test by exhaustive enumeration of partitions of V into exactly
/// t parts (restricted-growth strings), requiring every part connected and
/// all pairs adjacent. Sound for connected graphs: branch sets of a minor
/// can always be extended to a partition of V. n <= ~16.
pub fn clique_minor_by_partitions(g: &Graph, t: usize) -> bool {
    assert!(g.is_connected(), "partition enumerator needs a connected graph");
    let n = g.n();
    if t == 0 {
        return true;
    }
    if t > n {
        return false;
    }
    let rows: Vec<u64> = g.bitrows().expect("small graph");
    let mut parts: Vec<u64> = Vec::new();

    fn connected(mask: u64, rows: &[u64]) -> bool {
        if mask == 0 {
            return false;
        }
        let start = mask.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut bits = frontier;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                next |= rows[v] & mask & !seen;
            }
            seen |= next;
            frontier = next;
        }
        seen == mask
    }

    fn nbhd(mask: u64, rows: &[u64]) -> u64 {
        let mut out = 0u64;
        let mut bits = mask;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            out |= rows[v];
        }
        out & !mask
    }

    fn rec(v: usize, n: usize, t: usize, rows: &[u64], parts: &mut Vec<u64>) -> bool {
        if v == n {
            if parts.len() != t {
                return false;
            }
            for p in parts.iter() {
                if !connected(*p, rows) {
                    return false;
                }
            }
            for i in 0..t {
                for j in (i + 1)..t {
                    if nbhd(parts[i], rows) & parts[j] == 0 {
                        return false;
                    }
                }
            }
            return true;
        }
        let unassigned_after: u64 = ((0..n).map(|i| 1u64 << i).sum::<u64>())
            & !((1u64 << (v + 1)) - 1);
        // prune: disconnected part that nothing unassigned can reach again
        for p in parts.iter() {
            if !connected(*p, rows) && nbhd(*p, rows) & (unassigned_after | (1u64 << v)) == 0 {
                return false;
            }
        }
        let existing = parts.len();
        for p in 0..existing.min(t) {
            parts[p] |= 1u64 << v;
            if rec(v + 1, n, t, rows, parts) {
                return true;
            }
            parts[p] &= !(1u64 << v);
        }
        if existing < t {
            parts.push(1u64 << v);
            if rec(v + 1, n, t, rows, parts) {
                return true;
            }
            parts.pop();
        }
        false
    }

    rec(0, n, t, &rows, &mut parts)
}

/// Erdos-Renyi-style random graph, deterministic under a seeded RNG.
pub fn random_graph<R: Rng>(n: usize, edge_prob: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in (u + 1)..n as u32 {
            if rng.gen_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("random edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn naive_widths_on_known_graphs() {
        assert_eq!(naive_treewidth(&Graph::complete(4)), 3);
        assert_eq!(naive_treewidth(&Graph::cycle(5)), 2);
        assert_eq!(naive_pathwidth(&Graph::path(5)), 1);
        assert_eq!(naive_treedepth(&Graph::path(4)), 3);
        assert_eq!(naive_treedepth(&Graph::complete(4)), 4);
        let star = Graph::from_edges(6, (1..6).map(|v| (0u32, v))).unwrap();
        assert_eq!(naive_treedepth(&star), 2);
    }

    #[test]
    fn partition_minor_matches_simple_cases() {
        assert!(clique_minor_by_partitions(&Graph::complete(5), 5));
        assert!(!clique_minor_by_partitions(&Graph::cycle(6), 4));
        assert!(clique_minor_by_partitions(&Graph::cycle(6), 3));
    }

    #[test]
    fn naive_iso_sees_relabelings() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let h = Graph::from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert!(naive_isomorphic(&g, &h));
        assert!(!naive_isomorphic(&g, &Graph::path(5)));
    }
}
