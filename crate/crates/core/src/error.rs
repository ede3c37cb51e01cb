use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid polyhedron: {0}")]
    InvalidPolyhedron(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("the zero vector has no primitive normalization")]
    ZeroVector,

    #[error("point is not in the polyhedron")]
    Infeasible,

    #[error("direction is not a circuit of the polyhedron")]
    NotACircuit,

    #[error("unknown instance {0:?}")]
    UnknownInstance(String),

    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),

    #[error("value {0} is not representable in the chosen scalar type")]
    Unrepresentable(String),

    #[error("point was not reached by the walk search")]
    NotReached,

    #[error("certificate: {0}")]
    Certificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
