use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("trace is undefined for a constant polynomial")]
    ConstantPolynomial,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("vector must be nonzero")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    Dimension { expected: usize, actual: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("vertices of a pair must be distinct (got {0} twice)")]
    SameVertex(usize),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid involution: {0}")]
    InvalidInvolution(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("certificate does not verify: {0}")]
    Certificate(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
