use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("p must be prime (got {0})")]
    NotPrime(u64),

    #[error("c must be at least 2 (got {0})")]
    ExponentTooSmall(u32),

    #[error("p^(c-1) = {p}^{exponent} exceeds the supported range of 2^62")]
    OrderOverflow { p: u64, exponent: u32 },

    #[error("invalid ring element: {0}")]
    InvalidElement(String),

    #[error("{0}")]
    Domain(String),

    #[error("{what} of {requested} exceeds the budget of {budget}")]
    TooLarge {
        what: &'static str,
        requested: u64,
        budget: u64,
    },

    #[error("level index {index} out of range 1..={max}")]
    LevelOutOfRange { index: usize, max: usize },

    #[error("alpha must lie in [0, 1] (got {0})")]
    AlphaOutOfRange(String),

    #[error("parameter mismatch: {0}")]
    ParamsMismatch(String),

    #[error("graph is disconnected: {count} components with sizes {sizes:?}")]
    Disconnected { count: usize, sizes: Vec<usize> },

    #[error("graph diameter {0} exceeds 2")]
    DiameterTooLarge(u64),

    #[error("eigensolver did not converge after {iterations} iterations (best residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("eigensolver residual {residual:e} exceeds tolerance {tol:e}")]
    ResidualTooLarge { residual: f64, tol: f64 },

    #[error("invalid tolerance {0:e}")]
    InvalidTolerance(f64),

    #[error("spectra describe different dimensions: {closed} (closed form) vs {numeric} (numeric)")]
    MultiplicityMismatch { closed: u64, numeric: u64 },
}
