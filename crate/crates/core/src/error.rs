use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("mismatched shapes: {0}")]
    Mismatch(String),
    #[error("symbol is not distinguished: {0}")]
    NotDistinguished(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("group order {order} exceeds the bound {bound}")]
    BoundExceeded { order: u128, bound: u128 },
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    /// True when the error signals a bug or a failed self-check rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Inconsistency(_) | Error::InexactDivision(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
