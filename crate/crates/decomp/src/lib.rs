//! Decomposition witnesses (tree, path, elimination forest), validity
//! checking, reduction, exact width oracles by exhaustive DP, the
//! logarithmic-depth balancing conversion, and simple k-path recognition.

pub mod balance;
pub mod exact;
pub mod json;
pub mod reduce;
pub mod simple_kpath;
pub mod types;
pub mod validate;

pub use balance::{balance_log_depth, BalancedDecomposition, LOG_DEPTH_C};
pub use exact::{exact_pathwidth, exact_treedepth, exact_treewidth, ExactError, MAX_EXACT_VERTICES};
pub use json::{from_json_str, to_json_string, DecompositionJson};
pub use reduce::{reduce, reduce_path};
pub use simple_kpath::simple_kpath_recognize;
pub use types::{EliminationForest, PathDecomposition, TreeDecomposition};
pub use validate::{
    validate, validate_elimination, validate_path, validate_tree, Decomposition, DecompViolation,
};
