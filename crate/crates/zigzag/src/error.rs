use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("incompatible grading groups")]
    GradingMismatch,
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("rank must be at least 2, got {0}")]
    Rank(usize),
    #[error("vertex {vertex} out of range 1..={max}")]
    Vertex { vertex: usize, max: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("malformed complex: {0}")]
    Complex(String),
    #[error("not a chain map: {0}")]
    NotChainMap(String),
    #[error("curve error: {0}")]
    Curve(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
