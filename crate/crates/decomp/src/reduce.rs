//! Reduction of decompositions: repeatedly contract a tree edge whose one
//! bag contains the other, until no bag is a subset of any other. (A global
//! containment always induces an adjacent one, by the connectivity
//! condition, so adjacent contraction to a fixpoint is complete.)

use crate::types::{PathDecomposition, TreeDecomposition};

fn subset(a: &[u32], b: &[u32]) -> bool {
    a.iter().all(|v| b.binary_search(v).is_ok())
}

/// Reduce a tree-decomposition. Width never increases; for a decomposition
/// of width k the result has at most max(n - k, 1) nodes.
pub fn reduce(d: &TreeDecomposition) -> TreeDecomposition {
    let mut bags = d.bags.clone();
    let mut adj: Vec<std::collections::BTreeSet<usize>> = {
        let mut a = vec![std::collections::BTreeSet::new(); bags.len()];
        for &(x, y) in &d.edges {
            a[x].insert(y);
            a[y].insert(x);
        }
        a
    };
    let mut alive = vec![true; bags.len()];
    let mut root = d.root;
    loop {
        let mut merged = false;
        'scan: for t in 0..bags.len() {
            if !alive[t] {
                continue;
            }
            let nbrs: Vec<usize> = adj[t].iter().copied().collect();
            for s in nbrs {
                if subset(&bags[t], &bags[s]) {
                    // contract t into s
                    let others: Vec<usize> = adj[t].iter().copied().filter(|&x| x != s).collect();
                    for o in others {
                        adj[o].remove(&t);
                        adj[o].insert(s);
                        adj[s].insert(o);
                    }
                    adj[s].remove(&t);
                    adj[t].clear();
                    alive[t] = false;
                    if root == Some(t) {
                        root = Some(s);
                    }
                    merged = true;
                    break 'scan;
                }
            }
        }
        if !merged {
            break;
        }
    }
    // compact indices, keeping ascending order of survivors
    let mut new_id = vec![usize::MAX; bags.len()];
    let mut out_bags = Vec::new();
    for t in 0..bags.len() {
        if alive[t] {
            new_id[t] = out_bags.len();
            out_bags.push(std::mem::take(&mut bags[t]));
        }
    }
    let mut out_edges = Vec::new();
    for t in 0..alive.len() {
        if alive[t] {
            for &s in &adj[t] {
                if t < s {
                    out_edges.push((new_id[t], new_id[s]));
                }
            }
        }
    }
    TreeDecomposition {
        bags: out_bags,
        edges: out_edges,
        root: root.map(|r| new_id[r]),
    }
}

/// Reduce a path-decomposition by dropping bags contained in a neighbor.
pub fn reduce_path(d: &PathDecomposition) -> PathDecomposition {
    let mut bags = d.bags.clone();
    loop {
        let mut drop_at = None;
        for i in 0..bags.len() {
            let prev_ok = i > 0 && subset(&bags[i], &bags[i - 1]);
            let next_ok = i + 1 < bags.len() && subset(&bags[i], &bags[i + 1]);
            if prev_ok || next_ok {
                drop_at = Some(i);
                break;
            }
        }
        match drop_at {
            Some(i) => {
                bags.remove(i);
            }
            None => break,
        }
    }
    PathDecomposition { bags }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validate::{validate_path, validate_tree};
    use ugraph_core::Graph;

    #[test]
    fn star_duplicate_bags_collapse() {
        // K_{1,4}, bags {c,1},{c,1},{c,2},{c,3},{c,4} reduce to 4 bags.
        let g =
            Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let d = TreeDecomposition {
            bags: vec![vec![0, 1], vec![0, 1], vec![0, 2], vec![0, 3], vec![0, 4]],
            edges: vec![(0, 1), (1, 2), (2, 3), (3, 4)],
            root: None,
        };
        assert_eq!(validate_tree(&d, &g), Ok(()));
        let r = reduce(&d);
        assert_eq!(r.bags.len(), 4);
        assert_eq!(validate_tree(&r, &g), Ok(()));
        assert!(r.width() <= d.width());
    }

    #[test]
    fn reduce_is_idempotent() {
        let g = Graph::path(5);
        let d = TreeDecomposition {
            bags: vec![vec![0, 1], vec![1], vec![1, 2], vec![2, 3], vec![3], vec![3, 4]],
            edges: vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)],
            root: Some(0),
        };
        let once = reduce(&d);
        let twice = reduce(&once);
        assert_eq!(once, twice);
        assert_eq!(validate_tree(&once, &g), Ok(()));
        // no containments remain
        for i in 0..once.bags.len() {
            for j in 0..once.bags.len() {
                if i != j {
                    assert!(!subset(&once.bags[i], &once.bags[j]));
                }
            }
        }
    }

    #[test]
    fn reduce_path_keeps_validity() {
        let g = Graph::path(4);
        let d = PathDecomposition::new(vec![
            vec![0, 1],
            vec![1],
            vec![1, 2],
            vec![1, 2],
            vec![2, 3],
        ]);
        let r = reduce_path(&d);
        assert_eq!(r.bags.len(), 3);
        assert_eq!(validate_path(&r, &g), Ok(()));
    }
}
