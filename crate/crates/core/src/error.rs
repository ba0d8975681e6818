//! Error type shared across the crate.

use thiserror::Error;

/// Errors reported by the public API.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension {dim} outside supported range {min}..={max}")]
    DimensionOutOfRange { dim: usize, min: usize, max: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("invalid sparse entry at ({row}, {col}): {reason}")]
    InvalidSparseEntry {
        row: usize,
        col: usize,
        reason: &'static str,
    },

    #[error("non-finite value encountered in {context}")]
    NonFinite { context: &'static str },

    #[error("matrix is not Hermitian: max asymmetry {asymmetry:.3e}")]
    NotHermitian { asymmetry: f64 },

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off:.3e})")]
    NoConvergence { sweeps: usize, off: f64 },

    #[error("{expected} precondition violated: residual {residual:.3e} exceeds {tolerance:.1e}")]
    PreconditionViolated {
        expected: &'static str,
        residual: f64,
        tolerance: f64,
    },

    #[error("invariant `{what}` violated: residual {residual:.3e} exceeds {tolerance:.1e}")]
    InvariantViolated {
        what: &'static str,
        residual: f64,
        tolerance: f64,
    },

    #[error("ladder top reached: no eigenvector above n = 4")]
    LadderTop,

    #[error("cannot operate on a zero vector")]
    ZeroVector,

    #[error("extended precision requires at least 30 decimal digits, got {digits}")]
    TooFewDigits { digits: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
