//! Core graph toolkit: small simple graphs with stable indexing, exact
//! isomorphism via canonical forms, exhaustive clique-minor search,
//! enumeration of small graphs up to isomorphism, embedding certificates
//! with verification, and graph6 / edge-list / JSON I/O.

pub mod embedding;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod io;
pub mod iso;
pub mod minor;

pub use embedding::{verify_embedding, verify_map, Embedding, JumpSet, Mode, Violation};
pub use enumerate::{enumerate_connected_graphs, enumerate_graph_classes};
pub use error::{CoreError, Result};
pub use graph::Graph;
pub use iso::{are_isomorphic, automorphism_count, canonical_form, CanonicalForm};
pub use minor::{has_clique_minor, has_clique_minor_with, MinorSearchParams, DEFAULT_MINOR_BUDGET};
