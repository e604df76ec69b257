//! Universal-graph artifacts: the constructed host graph together with the
//! construction metadata its embedding procedure consumes, and a
//! decomposition witness certifying the host's own width.

use crate::pathwidth::PathwidthLayout;
use crate::treewidth::TreewidthMeta;
use crate::tw2::Tw2QuasiMeta;
use serde::{Deserialize, Serialize};
use ugraph_core::{Graph, Mode};
use ugraph_decomp::Decomposition;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    Treedepth,
    Pathwidth,
    Treewidth,
    Tw2Quasi,
}

impl std::fmt::Display for ClassKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ClassKind::Treedepth => "treedepth",
            ClassKind::Pathwidth => "pathwidth",
            ClassKind::Treewidth => "treewidth",
            ClassKind::Tw2Quasi => "tw2quasi",
        };
        write!(f, "{s}")
    }
}

/// Host tree for the treedepth-universal construction: the complete n-ary
/// rooted tree of depth k, in breadth-first indexing.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TreedepthMeta {
    pub arity: u32,
    pub depth: u32,
    /// parent[v] for every tree node; None only for the root.
    pub parent: Vec<Option<u32>>,
    /// children of each node, ascending.
    pub children: Vec<Vec<u32>>,
    /// level of each node (root = 1).
    pub level: Vec<u32>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "lowercase")]
pub enum ArtifactMeta {
    Treedepth(TreedepthMeta),
    Pathwidth(PathwidthLayout),
    Treewidth(TreewidthMeta),
    Tw2Quasi(Tw2QuasiMeta),
}

#[derive(Clone, Debug)]
pub struct UniversalArtifact {
    pub graph: Graph,
    pub class_kind: ClassKind,
    pub k: u32,
    pub n: u32,
    pub mode: Mode,
    pub meta: ArtifactMeta,
}

impl UniversalArtifact {
    /// Faithfulness certificate: a decomposition witnessing the host's own
    /// width/depth bound. Computed on demand (hosts can be large).
    pub fn witness(&self) -> Decomposition {
        match &self.meta {
            ArtifactMeta::Treedepth(meta) => {
                Decomposition::Elimination(ugraph_decomp::EliminationForest {
                    parent: meta.parent.clone(),
                })
            }
            ArtifactMeta::Pathwidth(layout) => {
                Decomposition::Path(crate::pathwidth::witness(layout))
            }
            ArtifactMeta::Treewidth(meta) => {
                Decomposition::Tree(crate::treewidth::witness(meta))
            }
            ArtifactMeta::Tw2Quasi(meta) => Decomposition::Tree(crate::tw2::witness(meta)),
        }
    }
}
