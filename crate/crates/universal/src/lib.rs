//! Constructors of universal host graphs for graphs of bounded treedepth,
//! pathwidth, and treewidth, the quasi-polynomial treewidth-3 host for
//! treewidth-2 guests, and the blow-up / lift operations connecting
//! subgraph-universality to induced-universality.

pub mod artifact;
pub mod error;
pub mod lift;
pub mod pathwidth;
pub mod treedepth;
pub mod treewidth;
pub mod tw2;

pub use artifact::{ArtifactMeta, ClassKind, TreedepthMeta, UniversalArtifact};
pub use error::{Result, UniversalError, DEFAULT_VERTEX_CAP};
pub use lift::{
    add_universal_vertices, blowup, degeneracy_order, disconnected_lift, sub_to_induced_lift,
    LiftMeta, LiftedHost, UnionHost,
};
pub use pathwidth::{build_pathwidth_universal, pathwidth_host_size, PathwidthLayout};
pub use treedepth::{build_treedepth_universal, treedepth_host_size};
pub use treewidth::{
    build_treewidth_universal, SkeletonBag, TreewidthMeta, TreewidthParams, MAX_INDUCED_BAG_SIZE,
};
pub use tw2::{
    build_tw2_quasi_universal, embed_simple_2path, enumerate_simple_2paths, sub_parameter,
    tw2_host_size, verify_provider_contract, FallbackHnProvider, HnGraph, HnProvider, HnSizeClass,
    Tw2Detail, Tw2QuasiMeta,
};
