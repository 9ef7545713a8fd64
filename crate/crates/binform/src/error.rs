//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed form JSON: {0}")]
    Parse(String),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("coefficient vector has {got} entries, degree {degree} needs {need}")]
    LengthMismatch { degree: usize, need: usize, got: usize },
    #[error("form is numerically zero")]
    ZeroForm,
    #[error("root iteration and companion fallback both failed to converge")]
    RootSolve,
    #[error("form is a multiple of (x^2+y^2)^(d/2); the requested structure degenerates")]
    DegenerateCircle,
    #[error("rank {k} is out of range for degree {degree} (need 1 <= k and 2k <= d)")]
    InvalidRank { k: usize, degree: usize },
    #[error("operation requires a real-valued form")]
    RealInputRequired,
    #[error("degree {degree} is not a positive even integer")]
    OddDegree { degree: usize },
    #[error("two summand directions collapsed; the certificate system is singular")]
    CollapsedDirections,
    #[error("search budget exhausted before the critical census stabilized ({} points found)", found.len())]
    BudgetExhausted { found: Vec<crate::rank::CriticalRankK> },
}
