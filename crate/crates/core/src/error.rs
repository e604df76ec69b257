use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("edge endpoint {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: u32, n: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(u32),
    #[error("{op}: size limit exceeded (limit {limit}, got {got})")]
    SizeLimit {
        op: &'static str,
        limit: usize,
        got: usize,
    },
    #[error("search budget of {budget} node expansions exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, CoreError>;
