//! Recognition of simple k-paths: graphs admitting a path-decomposition
//! whose bags are (k+1)-cliques, with adhesions of size k that are pairwise
//! distinct, covering every edge.

use crate::types::PathDecomposition;
use ugraph_core::Graph;

/// If g is a simple k-path, return a witnessing path-decomposition.
pub fn simple_kpath_recognize(g: &Graph, k: usize) -> Option<PathDecomposition> {
    let n = g.n();
    if n < k + 1 || n > 64 {
        return None;
    }
    if n == k + 1 {
        // a single bag: g must be exactly K_{k+1}
        return if g.edge_count() == k * (k + 1) / 2 {
            Some(PathDecomposition::new(vec![(0..n as u32).collect()]))
        } else {
            None
        };
    }
    let rows = g.bitrows().ok()?;
    for start in cliques_of_size(&rows, n, k + 1) {
        let mut state = State {
            rows: &rows,
            n,
            bags: vec![start],
            used: start,
            adhesions: Vec::new(),
        };
        if state.extend(start) {
            let bags = state.bags.iter().map(|&m| mask_to_vec(m)).collect();
            return Some(PathDecomposition::new(bags));
        }
    }
    None
}

struct State<'a> {
    rows: &'a [u64],
    n: usize,
    bags: Vec<u64>,
    used: u64,
    adhesions: Vec<u64>,
}

impl<'a> State<'a> {
    fn extend(&mut self, bag: u64) -> bool {
        if self.used == (1u64 << self.n) - 1 {
            return self.all_edges_covered();
        }
        let mut drop_bits = bag;
        while drop_bits != 0 {
            let drop = drop_bits.trailing_zeros() as usize;
            drop_bits &= drop_bits - 1;
            // a dropped vertex never returns, so all its edges must already
            // lie inside bags it appeared in
            if !self.vertex_done(drop) {
                continue;
            }
            let adhesion = bag & !(1 << drop);
            if self.adhesions.contains(&adhesion) {
                continue;
            }
            // the fresh vertex must complete the adhesion to a clique
            let mut candidates = !self.used & ((1u64 << self.n) - 1);
            let mut adh_bits = adhesion;
            while adh_bits != 0 {
                let a = adh_bits.trailing_zeros() as usize;
                adh_bits &= adh_bits - 1;
                candidates &= self.rows[a];
            }
            let mut cand_bits = candidates;
            while cand_bits != 0 {
                let fresh = cand_bits.trailing_zeros() as usize;
                cand_bits &= cand_bits - 1;
                let new_bag = adhesion | (1 << fresh);
                self.bags.push(new_bag);
                self.used |= 1 << fresh;
                self.adhesions.push(adhesion);
                if self.extend(new_bag) {
                    return true;
                }
                self.bags.pop();
                self.used &= !(1 << fresh);
                self.adhesions.pop();
            }
        }
        false
    }

    /// Have all g-edges at v been covered by the bags placed so far?
    fn vertex_done(&self, v: usize) -> bool {
        let mut seen = 0u64;
        for &mask in &self.bags {
            if mask & (1 << v) != 0 {
                seen |= mask;
            }
        }
        self.rows[v] & !seen == 0
    }

    fn all_edges_covered(&self) -> bool {
        let mut cov = vec![0u64; self.n];
        for &mask in &self.bags {
            let mut bits = mask;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                cov[v] |= mask & !(1 << v);
            }
        }
        (0..self.n).all(|v| self.rows[v] & !cov[v] == 0)
    }
}

fn mask_to_vec(mask: u64) -> Vec<u32> {
    let mut out = Vec::new();
    let mut bits = mask;
    while bits != 0 {
        let v = bits.trailing_zeros();
        bits &= bits - 1;
        out.push(v);
    }
    out
}

/// All cliques of exactly `size` vertices, as bitmasks in ascending order.
fn cliques_of_size(rows: &[u64], n: usize, size: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut stack: Vec<(u64, u64, usize)> = vec![(0, (1u64 << n) - 1, 0)];
    while let Some((clique, candidates, count)) = stack.pop() {
        if count == size {
            out.push(clique);
            continue;
        }
        let mut bits = candidates;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let mask_above = !((1u64 << (v + 1)) - 1);
            stack.push((
                clique | (1 << v),
                candidates & rows[v] & mask_above,
                count + 1,
            ));
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validate::validate_path;

    #[test]
    fn fan_is_a_simple_2path() {
        // bags {0,1,2},{1,2,3},{2,3,4}
        let g = Graph::from_edges(
            5,
            [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)],
        )
        .unwrap();
        let w = simple_kpath_recognize(&g, 2).expect("recognized");
        assert_eq!(validate_path(&w, &g), Ok(()));
        assert_eq!(w.bags.len(), 3);
    }

    #[test]
    fn complete_graphs() {
        assert!(simple_kpath_recognize(&Graph::complete(3), 2).is_some());
        // K_{k+2} admits no such decomposition (some edge stays uncovered)
        assert!(simple_kpath_recognize(&Graph::complete(4), 2).is_none());
    }

    #[test]
    fn cycles_are_not_simple_2paths() {
        assert!(simple_kpath_recognize(&Graph::cycle(6), 2).is_none());
    }

    #[test]
    fn book_graph_is_not_simple() {
        // three triangles sharing the edge {0,1}: the middle adhesion repeats
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)])
            .unwrap();
        assert!(simple_kpath_recognize(&g, 2).is_none());
    }
}
