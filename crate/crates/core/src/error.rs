use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("{0} is not a prime modulus")]
    NotPrime(u64),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("dimension {dim} exceeds the cap of {cap}")]
    CapExceeded { dim: usize, cap: usize },

    #[error("unsupported characteristic {char}: {reason}")]
    Characteristic { char: u64, reason: String },

    #[error("invalid structure: {0}")]
    Invalid(String),

    #[error("integral space has dimension {dim}, expected 1 ({what})")]
    IntegralDimension { what: String, dim: usize },

    #[error("not a sovereign character: {0}")]
    NotSovereign(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}
