use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuantumError {
    #[error("twist parameter {0} must be nonzero")]
    ZeroParameter(&'static str),
    #[error("degree {degree} exceeds the truncation bound {bound}")]
    TruncationOverflow { degree: usize, bound: usize },
}

pub type Result<T> = std::result::Result<T, QuantumError>;
