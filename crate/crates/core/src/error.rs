use thiserror::Error;

use crate::linalg::Field;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("unsupported type: {0}")]
    UnsupportedType(String),

    #[error("unsupported algebra: {0}")]
    UnsupportedAlgebra(String),

    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("tilting data does not match the quiver: {0}")]
    TiltingMismatch(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("parse error: {0}")]
    Parse(String),
}
