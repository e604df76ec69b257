//! Exhaustive enumeration of small graphs up to isomorphism, one canonical
//! representative per class, by augmenting (n-1)-vertex classes with every
//! possible neighborhood of a new vertex and deduplicating canonically.

use crate::error::{CoreError, Result};
use crate::graph::Graph;
use crate::iso::canonical_form;
use std::collections::BTreeMap;

pub const MAX_ENUM_VERTICES: usize = 8;

/// All graphs on exactly n vertices, one representative per isomorphism
/// class, in canonical-form order. n <= 8.
pub fn enumerate_graph_classes(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUM_VERTICES {
        return Err(CoreError::SizeLimit {
            op: "enumerate_graph_classes",
            limit: MAX_ENUM_VERTICES,
            got: n,
        });
    }
    if n == 0 {
        return Ok(vec![Graph::empty(0)]);
    }
    let mut reps = vec![Graph::empty(1)];
    for size in 2..=n {
        let mut seen = BTreeMap::new();
        for base in &reps {
            let new_v = (size - 1) as u32;
            for nbhd in 0u32..(1u32 << (size - 1)) {
                let extra = (0..new_v).filter(|&u| nbhd >> u & 1 == 1).map(|u| (u, new_v));
                let mut edges: Vec<(u32, u32)> = base.edges().collect();
                edges.extend(extra);
                let g = Graph::from_edges(size, edges)?;
                let form = canonical_form(&g)?;
                seen.entry(form).or_insert(g);
            }
        }
        reps = seen.into_values().collect();
    }
    Ok(reps)
}

/// One representative per isomorphism class of *connected* graphs on n
/// vertices. Counts for n = 1..7 are 1, 1, 2, 6, 21, 112, 853.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_graph_classes(n)?
        .into_iter()
        .filter(|g| g.is_connected())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_known_values() {
        // Numbers of graphs up to isomorphism: 1, 2, 4, 11, 34, 156, 1044.
        let all: Vec<usize> = (1..=7)
            .map(|n| enumerate_graph_classes(n).unwrap().len())
            .collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn connected_counts_match_known_values() {
        let conn: Vec<usize> = (1..=7)
            .map(|n| enumerate_connected_graphs(n).unwrap().len())
            .collect();
        assert_eq!(conn, vec![1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn n3_yields_path_and_triangle() {
        let graphs = enumerate_connected_graphs(3).unwrap();
        assert_eq!(graphs.len(), 2);
        let mut sizes: Vec<usize> = graphs.iter().map(|g| g.edge_count()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 3]);
    }

    #[test]
    fn size_limit_is_enforced() {
        assert!(matches!(
            enumerate_graph_classes(9),
            Err(CoreError::SizeLimit { .. })
        ));
    }
}
