use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{what}: size {size} exceeds limit {limit}")]
    SizeLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("oracle inconsistency: {0}")]
    Oracle(String),

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("family `{0}` is not compact")]
    NotCompact(String),
}

pub type Result<T> = std::result::Result<T, Error>;
