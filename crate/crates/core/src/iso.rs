//! Exact isomorphism testing on small graphs via canonical forms:
//! iterative color refinement plus individualization backtracking, with
//! automorphism pruning. Intended for graphs on at most ~30 vertices
//! (hard limit 64).

use crate::error::{CoreError, Result};
use crate::graph::Graph;

const MAX_CANON_VERTICES: usize = 64;
const CANON_LEAF_BUDGET: u64 = 10_000_000;

/// Canonical form of a (possibly vertex-colored) graph. Two graphs have equal
/// canonical forms iff they are isomorphic (color-preservingly, when colored).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    n: usize,
    colors: Vec<u32>,
    rows: Vec<u64>,
}

impl CanonicalForm {
    /// A compact stable key, usable for file-level dedup output ordering.
    pub fn key_string(&self) -> String {
        let mut s = format!("{}:", self.n);
        for c in &self.colors {
            s.push_str(&format!("{c},"));
        }
        s.push(':');
        for r in &self.rows {
            s.push_str(&format!("{r:x},"));
        }
        s
    }
}

/// Refine `colors` to the coarsest stable partition: two vertices keep the
/// same color only if they agree on (color, multiset of neighbor colors).
/// Color ids are normalized so that sorted signatures get increasing ids;
/// the normalization is isomorphism-invariant.
fn refine(rows: &[u64], colors: &mut Vec<u32>) {
    let n = rows.len();
    loop {
        let ncol = colors.iter().copied().max().map_or(0, |c| c as usize + 1);
        let mut sigs: Vec<(u32, Vec<u32>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut cnt = vec![0u32; ncol];
            let mut bits = rows[v];
            while bits != 0 {
                let w = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                cnt[colors[w] as usize] += 1;
            }
            sigs.push((colors[v], cnt));
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| sigs[a].cmp(&sigs[b]));
        let mut new_colors = vec![0u32; n];
        let mut next = 0u32;
        for i in 0..n {
            if i > 0 && sigs[order[i]] != sigs[order[i - 1]] {
                next += 1;
            }
            new_colors[order[i]] = next;
        }
        if new_colors == *colors {
            return;
        }
        *colors = new_colors;
    }
}

/// First non-singleton color class (smallest color id), vertices ascending.
fn target_cell(colors: &[u32]) -> Option<Vec<u32>> {
    let ncol = colors.iter().copied().max().map_or(0, |c| c as usize + 1);
    let mut cells: Vec<Vec<u32>> = vec![Vec::new(); ncol];
    for (v, &c) in colors.iter().enumerate() {
        cells[c as usize].push(v as u32);
    }
    cells.into_iter().find(|cell| cell.len() > 1)
}

struct Searcher<'a> {
    rows: &'a [u64],
    init_colors: &'a [u32],
    n: usize,
    best: Option<(Vec<u32>, Vec<u64>)>, // (init colors, adjacency rows) under best labeling
    best_perm: Vec<u32>,                // vertex -> canonical position
    auts: Vec<Vec<u32>>,                // discovered automorphisms (vertex -> vertex)
    leaves: u64,
}

impl<'a> Searcher<'a> {
    fn relabel_key(&self, perm: &[u32]) -> (Vec<u32>, Vec<u64>) {
        let mut colors = vec![0u32; self.n];
        let mut rows = vec![0u64; self.n];
        for v in 0..self.n {
            let p = perm[v] as usize;
            colors[p] = self.init_colors[v];
            let mut bits = self.rows[v];
            while bits != 0 {
                let w = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                rows[p] |= 1u64 << perm[w];
            }
        }
        (colors, rows)
    }

    fn leaf(&mut self, colors: &[u32]) -> Result<()> {
        self.leaves += 1;
        if self.leaves > CANON_LEAF_BUDGET {
            return Err(CoreError::BudgetExceeded { budget: CANON_LEAF_BUDGET });
        }
        // Discrete coloring: color id = canonical position.
        let perm: Vec<u32> = colors.to_vec();
        let key = self.relabel_key(&perm);
        match &self.best {
            None => {
                self.best = Some(key);
                self.best_perm = perm;
            }
            Some(best) => {
                if key < *best {
                    self.best = Some(key);
                    self.best_perm = perm;
                } else if key == *best {
                    // perm and best_perm induce the same canonical graph, so
                    // best_perm^{-1} . perm is an automorphism.
                    let mut inv_best = vec![0u32; self.n];
                    for v in 0..self.n {
                        inv_best[self.best_perm[v] as usize] = v as u32;
                    }
                    let aut: Vec<u32> =
                        (0..self.n).map(|v| inv_best[perm[v] as usize]).collect();
                    if aut.iter().enumerate().any(|(v, &w)| v as u32 != w) {
                        self.auts.push(aut);
                    }
                }
            }
        }
        Ok(())
    }

    fn explore(&mut self, mut colors: Vec<u32>, path: &mut Vec<u32>) -> Result<()> {
        refine(self.rows, &mut colors);
        let cell = match target_cell(&colors) {
            None => return self.leaf(&colors),
            Some(cell) => cell,
        };
        let fresh = colors.iter().copied().max().unwrap() + 1;
        let mut tried: Vec<u32> = Vec::new();
        for &u in &cell {
            // Skip u if a known automorphism that fixes the current path maps
            // it into an already-explored sibling.
            let skip = self.auts.iter().any(|aut| {
                path.iter().all(|&p| aut[p as usize] == p) && tried.contains(&aut[u as usize])
            });
            if skip {
                continue;
            }
            tried.push(u);
            let mut child = colors.clone();
            child[u as usize] = fresh;
            path.push(u);
            let res = self.explore(child, path);
            path.pop();
            res?;
        }
        Ok(())
    }
}

/// Canonical form with initial vertex colors (color-preserving isomorphism).
pub fn canonical_form_colored(g: &Graph, init_colors: &[u32]) -> Result<CanonicalForm> {
    if g.n() > MAX_CANON_VERTICES {
        return Err(CoreError::SizeLimit {
            op: "canonical_form",
            limit: MAX_CANON_VERTICES,
            got: g.n(),
        });
    }
    assert_eq!(init_colors.len(), g.n());
    let rows = g.bitrows()?;
    if g.n() == 0 {
        return Ok(CanonicalForm { n: 0, colors: Vec::new(), rows: Vec::new() });
    }
    let mut searcher = Searcher {
        rows: &rows,
        init_colors,
        n: g.n(),
        best: None,
        best_perm: Vec::new(),
        auts: Vec::new(),
        leaves: 0,
    };
    searcher.explore(init_colors.to_vec(), &mut Vec::new())?;
    let (colors, rows) = searcher.best.expect("at least one leaf");
    Ok(CanonicalForm { n: g.n(), colors, rows })
}

/// Canonical form of an uncolored graph.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_form_colored(g, &vec![0u32; g.n()])
}

/// Exact isomorphism test via canonical forms.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    if g1.degree_sequence() != g2.degree_sequence() {
        return Ok(false);
    }
    Ok(canonical_form(g1)? == canonical_form(g2)?)
}

/// Exact order of the automorphism group, by the orbit-stabilizer recursion:
/// |Aut| = |orbit(v)| * |Aut_v|, orbits computed by comparing canonical forms
/// of vertex-individualized colorings.
pub fn automorphism_count(g: &Graph) -> Result<u128> {
    if g.n() > MAX_CANON_VERTICES {
        return Err(CoreError::SizeLimit {
            op: "automorphism_count",
            limit: MAX_CANON_VERTICES,
            got: g.n(),
        });
    }
    let rows = g.bitrows()?;
    let mut colors = vec![0u32; g.n()];
    let mut order: u128 = 1;
    loop {
        refine(&rows, &mut colors);
        let cell = match target_cell(&colors) {
            None => return Ok(order),
            Some(cell) => cell,
        };
        let fresh = colors.iter().copied().max().unwrap() + 1;
        // Orbit of the cell's first vertex under the stabilizer of the colors
        // fixed so far: members whose individualized canonical form matches.
        let mut forms = Vec::with_capacity(cell.len());
        for &u in &cell {
            let mut c = colors.clone();
            c[u as usize] = fresh;
            forms.push(canonical_form_colored(g, &c)?);
        }
        let orbit = forms.iter().filter(|f| **f == forms[0]).count();
        order *= orbit as u128;
        colors[cell[0] as usize] = fresh;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_is_isomorphic_to_relabeled_cycle() {
        let c5 = Graph::cycle(5);
        let other = Graph::from_edges(5, [(0, 2), (2, 1), (1, 4), (4, 3), (3, 0)]).unwrap();
        assert!(are_isomorphic(&c5, &other).unwrap());
        let p5 = Graph::path(5);
        assert!(!are_isomorphic(&c5, &p5).unwrap());
    }

    #[test]
    fn relabeling_preserves_form() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5)]).unwrap();
        let perm = vec![3u32, 0, 5, 4, 1, 2];
        let h = g.relabel(&perm);
        assert!(are_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphism_count(&Graph::complete(3)).unwrap(), 6);
        assert_eq!(automorphism_count(&Graph::path(3)).unwrap(), 2);
        assert_eq!(automorphism_count(&Graph::cycle(5)).unwrap(), 10);
        assert_eq!(automorphism_count(&Graph::complete(5)).unwrap(), 120);
        // Star K_{1,4}: 4! leaf permutations.
        let star = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(automorphism_count(&star).unwrap(), 24);
        assert_eq!(automorphism_count(&Graph::empty(0)).unwrap(), 1);
        assert_eq!(automorphism_count(&Graph::empty(4)).unwrap(), 24);
    }

    #[test]
    fn colored_forms_distinguish_colorings() {
        let p3 = Graph::path(3);
        let end = canonical_form_colored(&p3, &[1, 0, 0]).unwrap();
        let mid = canonical_form_colored(&p3, &[0, 1, 0]).unwrap();
        let other_end = canonical_form_colored(&p3, &[0, 0, 1]).unwrap();
        assert_ne!(end, mid);
        assert_eq!(end, other_end);
    }
}
