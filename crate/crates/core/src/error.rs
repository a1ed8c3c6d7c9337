use thiserror::Error;

/// Errors raised by the symmetric-function engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("pole: denominator vanishes identically after substitution")]
    Pole,
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("degree {degree} exceeds the configured limit {limit}")]
    DegreeLimit { degree: usize, limit: usize },
    #[error("aggregate is not symmetric: {0}")]
    NonSymmetric(String),
    #[error("negative power of t survived coefficient extraction")]
    NegativeTPower,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
