use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument fell outside the domain of the function being evaluated.
    #[error("domain error: {0}")]
    Domain(String),

    /// The operation is a 0/0 form at a = b.
    #[error("degenerate pair: {0} is undefined when a = b")]
    Degenerate(&'static str),

    #[error("range error: {0}")]
    Range(String),

    #[error("unknown inequality id `{0}`")]
    UnknownSpec(String),

    /// Internal consistency check failed (Bernoulli table, extrapolation).
    #[error("verification failed: {0}")]
    Verification(String),

    #[error("convergence failure: {0}")]
    Convergence(String),
}

pub type Result<T> = std::result::Result<T, Error>;
