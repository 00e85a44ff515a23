//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input lies outside the domain an operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation hit a singular point (w = 0 or w² = 2 of the inverse map).
    #[error("singularity: {0}")]
    Singularity(String),

    /// No sign change and no near-zero value found while bracketing a root.
    #[error("no root found in [{lo}, {hi}]")]
    NoRoot { lo: f64, hi: f64 },

    /// A parameter violates its stated range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An operation produced a non-finite value.
    #[error("non-finite result in {0}")]
    NonFinite(String),

    /// More interior critical points than expected were detected.
    #[error("{count} interior critical points detected where exactly one was expected")]
    MultipleCriticalPoints { count: usize },

    /// Truncated-series evaluation cannot reach the requested accuracy.
    #[error("series tail bound {bound:.3e} exceeds {limit:.3e} at radius {radius}")]
    SeriesAccuracy { bound: f64, limit: f64, radius: f64 },

    /// Adaptive quadrature failed to converge.
    #[error("quadrature did not converge to tolerance {tol:.3e}")]
    QuadratureNonConvergence { tol: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
