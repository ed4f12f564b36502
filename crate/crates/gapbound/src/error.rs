use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("not a probability measure: {0}")]
    InvalidMeasure(String),

    #[error("not a stochastic kernel: {0}")]
    InvalidKernel(String),

    #[error("measure is degenerate (weight {weight:e} at state {state})")]
    DegenerateMeasure { state: usize, weight: f64 },

    #[error("kernel is not reversible for the measure (residual {residual:e} > {tol:e})")]
    NotReversible { residual: f64, tol: f64 },

    #[error("state space too large: {states} states exceeds cap {cap}")]
    CapExceeded { states: usize, cap: usize },

    #[error("empty state list")]
    EmptyStates,

    #[error("empty sequence")]
    EmptySequence,

    #[error("conditional site distribution has zero normalizer at site {site}")]
    ZeroNormalizer { site: usize },

    #[error("invalid frequency band: {0}")]
    InvalidBand(String),

    #[error("positive-tail bound does not decay; transfer integral diverges")]
    NonDecayingBound,

    #[error("eigensolver did not converge (off-diagonal residual {0:e})")]
    NoConvergence(f64),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
