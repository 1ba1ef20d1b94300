use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in the library.
///
/// The split between domain, resource and I/O failures mirrors the exit
/// codes of the command-line tool (1, 2 and 1 respectively).
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of the requested operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The request exceeds a configured memory or size cap.
    #[error("resource limit: {0}")]
    ResourceLimit(String),

    /// An evaluation produced NaN or overflowed.
    #[error("non-finite result in {0}")]
    NonFinite(&'static str),

    /// An iterative method failed to reach its tolerance.
    #[error("no convergence in {what} after {iterations} iterations")]
    NoConvergence { what: &'static str, iterations: usize },

    /// Two routes that must agree did not.
    #[error("consistency check failed: {0}")]
    Inconsistent(String),

    /// A golden file is missing or malformed.
    #[error("golden data: {0}")]
    Golden(String),

    #[error("format error: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn is_resource(&self) -> bool {
        matches!(self, Error::ResourceLimit(_))
    }
}

/// Rejects NaN and infinities.
pub(crate) fn finite(value: f64, what: &'static str) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite(what))
    }
}
