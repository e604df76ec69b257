use thiserror::Error;

#[derive(Debug, Error)]
pub enum UniversalError {
    #[error("construction needs {needed} vertices, over the cap of {cap}")]
    VertexCapExceeded { needed: u128, cap: usize },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("graph is not {required}-degenerate (vertex {vertex} has back-degree {got})")]
    DegeneracyViolation { required: usize, vertex: u32, got: usize },
    #[error("H-provider contract violated: {0}")]
    ProviderContract(String),
    #[error(transparent)]
    Core(#[from] ugraph_core::CoreError),
    #[error(transparent)]
    Exact(#[from] ugraph_decomp::ExactError),
}

pub type Result<T> = std::result::Result<T, UniversalError>;

pub const DEFAULT_VERTEX_CAP: usize = 10_000_000;
