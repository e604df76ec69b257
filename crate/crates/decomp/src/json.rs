//! Decomposition JSON: `{kind, nodes, edges, bags, root?}` with
//! deterministic field ordering.

use crate::types::{EliminationForest, PathDecomposition, TreeDecomposition};
use crate::validate::Decomposition;
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum DecompositionJson {
    Tree {
        nodes: usize,
        edges: Vec<(usize, usize)>,
        bags: Vec<Vec<u32>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        root: Option<usize>,
    },
    Path {
        bags: Vec<Vec<u32>>,
    },
    Elimination {
        nodes: usize,
        /// Forest edges as (parent, child) pairs; roots have no entry.
        edges: Vec<(u32, u32)>,
        bags: Vec<Vec<u32>>,
    },
}

impl From<&Decomposition> for DecompositionJson {
    fn from(d: &Decomposition) -> Self {
        match d {
            Decomposition::Tree(t) => DecompositionJson::Tree {
                nodes: t.bags.len(),
                edges: t.edges.clone(),
                bags: t.bags.clone(),
                root: t.root,
            },
            Decomposition::Path(p) => DecompositionJson::Path { bags: p.bags.clone() },
            Decomposition::Elimination(f) => DecompositionJson::Elimination {
                nodes: f.parent.len(),
                edges: f
                    .parent
                    .iter()
                    .enumerate()
                    .filter_map(|(v, p)| p.map(|p| (p, v as u32)))
                    .collect(),
                bags: (0..f.parent.len() as u32).map(|v| vec![v]).collect(),
            },
        }
    }
}

impl TryFrom<DecompositionJson> for Decomposition {
    type Error = String;

    fn try_from(j: DecompositionJson) -> Result<Self, String> {
        Ok(match j {
            DecompositionJson::Tree { nodes, edges, bags, root } => {
                if bags.len() != nodes {
                    return Err(format!("nodes={} but {} bags given", nodes, bags.len()));
                }
                Decomposition::Tree(TreeDecomposition {
                    bags: bags
                        .into_iter()
                        .map(|mut b| {
                            b.sort_unstable();
                            b.dedup();
                            b
                        })
                        .collect(),
                    edges,
                    root,
                })
            }
            DecompositionJson::Path { bags } => {
                Decomposition::Path(PathDecomposition::new(bags))
            }
            DecompositionJson::Elimination { nodes, edges, bags: _ } => {
                let mut parent = vec![None; nodes];
                for (p, c) in edges {
                    if c as usize >= nodes || p as usize >= nodes {
                        return Err(format!("forest edge ({p}, {c}) out of range"));
                    }
                    if parent[c as usize].is_some() {
                        return Err(format!("vertex {c} has two parents"));
                    }
                    parent[c as usize] = Some(p);
                }
                Decomposition::Elimination(EliminationForest { parent })
            }
        })
    }
}

pub fn to_json_string(d: &Decomposition) -> String {
    serde_json::to_string_pretty(&DecompositionJson::from(d)).expect("serializable")
}

pub fn from_json_str(s: &str) -> Result<Decomposition, String> {
    let j: DecompositionJson = serde_json::from_str(s).map_err(|e| e.to_string())?;
    Decomposition::try_from(j)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrips() {
        let t = Decomposition::Tree(TreeDecomposition {
            bags: vec![vec![0, 1], vec![1, 2]],
            edges: vec![(0, 1)],
            root: Some(0),
        });
        let s = to_json_string(&t);
        assert!(s.contains("\"kind\": \"tree\""));
        let back = from_json_str(&s).unwrap();
        match back {
            Decomposition::Tree(td) => assert_eq!(td.bags.len(), 2),
            _ => panic!("wrong kind"),
        }

        let f = Decomposition::Elimination(EliminationForest {
            parent: vec![None, Some(0), Some(0)],
        });
        let s = to_json_string(&f);
        let back = from_json_str(&s).unwrap();
        match back {
            Decomposition::Elimination(ef) => assert_eq!(ef.parent, vec![None, Some(0), Some(0)]),
            _ => panic!("wrong kind"),
        }
    }
}
