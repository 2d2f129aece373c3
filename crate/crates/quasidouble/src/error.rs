use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A precondition on the input was violated (shape mismatch, value out of
    /// the documented domain, non-finite entries, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A matrix required to be Hermitian positive definite has an eigenvalue
    /// at or below zero.
    #[error("matrix is not positive definite (min eigenvalue {min_eig:e})")]
    NotPositiveDefinite { min_eig: f64 },

    /// An iterative kernel exhausted its budget or produced garbage.
    #[error("numerical failure: {0}")]
    NumericalFailure(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn numerical(msg: impl Into<String>) -> Self {
        Error::NumericalFailure(msg.into())
    }
}
