use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("element outside the span: {0}")]
    OutsideSpan(String),
    #[error("stabilization failure: {0}")]
    Stabilization(String),
}

pub type Result<T> = std::result::Result<T, Error>;
