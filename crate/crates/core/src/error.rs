use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CoreError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalars from incompatible fields")]
    FieldMismatch,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("not a complex: d∘d ≠ 0 at level {0}")]
    NotAComplex(i32),
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
    #[error("linear system has no solution")]
    Inconsistent,
}
