//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by channel synthesis, precoder construction and the
/// mutual-information estimators.
#[derive(Debug, Error)]
pub enum Error {
    /// Matrix dimensions do not fit the requested operation.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// A channel is numerically rank deficient for an inversion-based precoder.
    #[error("rank-deficient channel: singular value s[{index}] = {value:.3e} below {threshold:.1e} of s_max")]
    RankDeficient {
        index: usize,
        value: f64,
        threshold: f64,
    },

    /// An argument violates a documented precondition.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// The requested estimator cannot handle the problem size.
    #[error("capability error: {0}")]
    Capability(String),

    /// An internal consistency check failed; indicates a bug, never expected.
    #[error("internal consistency error: {0}")]
    Internal(String),

    /// Underlying I/O failure (matrix dumps).
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    /// A binary dump did not match the expected layout.
    #[error("format error in {path}: {reason}")]
    Format { path: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
