//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("context mismatch: {0}")]
    ContextMismatch(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable family `{0}`")]
    DuplicateFamily(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("order mismatch: {0}")]
    OrderMismatch(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("not a source: E- does not annihilate the given polynomial")]
    NotASource,
    #[error("matrix must have determinant 1, found {0}")]
    DetNotOne(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("computation infeasible: {0}")]
    Infeasible(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
