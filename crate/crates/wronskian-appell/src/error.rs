use thiserror::Error;

/// Errors surfaced by the library.
///
/// `InternalConsistency` marks violations of identities that are guaranteed
/// to hold mathematically; if one fires it is a bug, never a usage problem.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("internal consistency violation: {0}")]
    InternalConsistency(String),

    #[error("root finding did not converge: residual {residual:e} after {iterations} iterations")]
    NonConvergence {
        residual: f64,
        iterations: u32,
        /// Best iterate found, as (re, im) pairs.
        best: Vec<(f64, f64)>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::InternalConsistency(msg.into())
    }
}
