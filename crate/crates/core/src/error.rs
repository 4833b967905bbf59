//! Error taxonomy shared across the workspace.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("difference order {order} exceeds available samples ({samples})")]
    OrderExceedsSamples { order: usize, samples: usize },

    #[error("series failed to converge within n_max = {n_max} (last term {last_term:e})")]
    NonConvergence { n_max: usize, last_term: f64 },

    #[error("argument must be positive, got {0}")]
    NonPositiveArgument(f64),

    #[error("Hurwitz zeta has a pole at s = 1")]
    PoleAtOne,

    #[error("unsupported s = {0} (only s in {{0, -1, -2, -3}})")]
    UnsupportedS(f64),

    #[error("no closed form tabulated for (n, x) = ({0}, {1})")]
    UnsupportedPair(usize, f64),

    #[error("series diverges at the requested point")]
    Divergence,

    #[error("unsupported Euler-sum key")]
    UnsupportedKey,

    #[error("quadrature tolerance not reached after {panels} panels (est_error {est_error:e})")]
    ToleranceNotReached { panels: usize, est_error: f64 },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("unknown identity id: {0}")]
    UnknownId(String),
}

pub type Result<T> = std::result::Result<T, Error>;
