use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field error: {0}")]
    Field(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid structure: {0}")]
    Structure(String),
    #[error("antipode is not invertible")]
    AntipodeNotInvertible,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("degree {degree} is outside the materialized range 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
