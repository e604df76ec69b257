//! Exhaustive clique-minor testing on small graphs.
//!
//! `has_clique_minor(g, t)` decides whether K_t is a minor of g by searching
//! for t pairwise-disjoint connected vertex sets (branch sets) with an edge
//! between every pair. The search is deterministic branch-and-bound over
//! bitset states; exceeding the node budget is an explicit error, never a
//! wrong answer.

use crate::error::{CoreError, Result};
use crate::graph::Graph;

pub const DEFAULT_MINOR_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug)]
pub struct MinorSearchParams {
    pub budget: u64,
}

impl Default for MinorSearchParams {
    fn default() -> Self {
        MinorSearchParams { budget: DEFAULT_MINOR_BUDGET }
    }
}

struct Search<'a> {
    rows: &'a [u64],
    t: usize,
    budget: u64,
    nodes: u64,
    sets: Vec<u64>,
    nmasks: Vec<u64>, // open neighborhood of each finalized set
}

impl<'a> Search<'a> {
    fn nbhd(&self, mask: u64) -> u64 {
        let mut out = 0u64;
        let mut bits = mask;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            out |= self.rows[v];
        }
        out & !mask
    }

    /// Start the next branch set; seeds must increase so each unordered
    /// family is enumerated once (sets sorted by their minimum vertex).
    fn next_set(&mut self, unassigned: u64, min_seed: u32) -> Result<bool> {
        let remaining = self.t - self.sets.len();
        // Seeds are strictly increasing, so every remaining set draws its
        // seed from the candidates above min_seed.
        let seed_candidates = unassigned & !low_mask(min_seed);
        if (seed_candidates.count_ones() as usize) < remaining {
            return Ok(false);
        }
        // Every future set needs an edge to every finalized set.
        for nm in &self.nmasks {
            if nm & unassigned == 0 {
                return Ok(false);
            }
        }
        let mut bits = seed_candidates;
        while bits != 0 {
            let seed = bits.trailing_zeros();
            bits &= bits - 1;
            let cur = 1u64 << seed;
            // This set may only use vertices above its seed.
            let banned = low_mask(seed + 1);
            if self.grow(cur, unassigned & !cur, banned)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn grow(&mut self, cur: u64, unassigned: u64, banned: u64) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(CoreError::BudgetExceeded { budget: self.budget });
        }
        let reach = self.nbhd(cur);
        // Dead end: some finalized set can no longer be linked to this one.
        let growth = cur | (unassigned & !banned);
        for nm in &self.nmasks {
            if nm & growth == 0 {
                return Ok(false);
            }
        }
        let frontier = reach & unassigned & !banned;
        if frontier == 0 {
            // Finalize: the set must already touch every previous set.
            for nm in &self.nmasks {
                if nm & cur == 0 {
                    return Ok(false);
                }
            }
            if self.sets.len() + 1 == self.t {
                return Ok(true);
            }
            let seed = cur.trailing_zeros();
            self.sets.push(cur);
            self.nmasks.push(reach);
            let res = self.next_set(unassigned, seed + 1);
            self.sets.pop();
            self.nmasks.pop();
            return res;
        }
        let c = frontier & frontier.wrapping_neg(); // lowest candidate
        if self.grow(cur | c, unassigned & !c, banned)? {
            return Ok(true);
        }
        self.grow(cur, unassigned, banned | c)
    }
}

/// Does g contain K_t as a minor? Exact; errors out if the node budget is hit.
pub fn has_clique_minor_with(g: &Graph, t: usize, params: MinorSearchParams) -> Result<bool> {
    if t == 0 {
        return Ok(true);
    }
    if t > g.n() {
        return Ok(false);
    }
    if g.n() > 64 {
        return Err(CoreError::SizeLimit { op: "has_clique_minor", limit: 64, got: g.n() });
    }
    // Cheap certificate: enough vertices of high degree forming a clique is
    // not required; but a graph with fewer than C(t,2) edges cannot host K_t.
    if g.edge_count() < t * (t - 1) / 2 {
        return Ok(false);
    }
    let rows = g.bitrows()?;
    let full = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut search = Search {
        rows: &rows,
        t,
        budget: params.budget,
        nodes: 0,
        sets: Vec::new(),
        nmasks: Vec::new(),
    };
    search.next_set(full, 0)
}

fn low_mask(k: u32) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

pub fn has_clique_minor(g: &Graph, t: usize) -> Result<bool> {
    has_clique_minor_with(g, t, MinorSearchParams::default())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cliques_have_their_own_minors() {
        let k5 = Graph::complete(5);
        assert!(has_clique_minor(&k5, 5).unwrap());
        assert!(has_clique_minor(&k5, 4).unwrap());
        assert!(!has_clique_minor(&k5, 6).unwrap());
    }

    #[test]
    fn cycles_and_paths() {
        assert!(has_clique_minor(&Graph::cycle(6), 3).unwrap());
        assert!(!has_clique_minor(&Graph::cycle(6), 4).unwrap());
        assert!(!has_clique_minor(&Graph::path(6), 3).unwrap());
        assert!(has_clique_minor(&Graph::path(6), 2).unwrap());
        assert!(has_clique_minor(&Graph::path(1), 1).unwrap());
        assert!(!has_clique_minor(&Graph::empty(0), 1).unwrap());
    }

    #[test]
    fn k33_has_k4_minor_but_not_k5() {
        let k33 = Graph::from_edges(
            6,
            [(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        assert!(has_clique_minor(&k33, 4).unwrap());
        assert!(!has_clique_minor(&k33, 5).unwrap());
    }

    #[test]
    fn budget_error_is_reported() {
        let g = Graph::complete(10);
        let err = has_clique_minor_with(&g, 5, MinorSearchParams { budget: 3 });
        assert!(matches!(err, Err(CoreError::BudgetExceeded { .. })));
    }

    #[test]
    fn petersen_graph_has_k5_minor() {
        // Contracting the five spokes of the Petersen graph yields K_5.
        let edges = [
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0), // outer cycle
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5), // inner pentagram
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9), // spokes
        ];
        let g = Graph::from_edges(10, edges).unwrap();
        assert!(has_clique_minor(&g, 5).unwrap());
        assert!(!has_clique_minor(&g, 6).unwrap());
    }
}
