use thiserror::Error;

use crate::fincat::CategoryViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not composable: {0}")]
    NotComposable(String),
    #[error("enumeration of {what} exceeded the bound of {bound} candidates")]
    EnumerationBoundExceeded { what: String, bound: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid category: {0}")]
    InvalidCategory(CategoryViolation),
    #[error("invalid data: {0}")]
    Invalid(String),
    #[error("invalid transformation: {0}")]
    InvalidTransformation(String),
    #[error("not an adjunction: {0}")]
    NotAnAdjunction(String),
    #[error("model check failed: {0}")]
    ModelCheckFailed(String),
    #[error("colimit generation exceeded the bound of {bound} words")]
    FinitenessExceeded { bound: usize },
    #[error("commutation failure: {0}")]
    CommutationFailure(String),
    #[error("no limit exists: {0}")]
    NoLimit(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn bound(what: impl Into<String>, bound: usize) -> Self {
        Error::EnumerationBoundExceeded { what: what.into(), bound }
    }

    /// True for errors caused by a configured bound rather than by the data.
    pub fn is_bound_exhaustion(&self) -> bool {
        matches!(
            self,
            Error::EnumerationBoundExceeded { .. } | Error::FinitenessExceeded { .. }
        )
    }
}
