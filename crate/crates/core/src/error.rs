use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("Gamma pole at z = {re} + {im}i")]
    Pole { re: f64, im: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid order α = {u} + {v}i: real part must lie in (0, 1) (α = 1 is also accepted)")]
    InvalidOrder { u: f64, v: f64 },

    #[error("kernel holds {available} weights, {needed} required")]
    Capacity { needed: usize, available: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("order α = {u} + {v}i does not produce a simple boundary curve")]
    NonSimpleOrder { u: f64, v: f64 },

    #[error("indeterminate: {0}")]
    Indeterminate(String),

    #[error("eigenvalue iteration did not converge")]
    EigenNonConvergence,

    #[error("point is not an equilibrium: |f(x) - x| = {residual:e}")]
    NotEquilibrium { residual: f64 },

    #[error("unknown system {0:?}")]
    UnknownSystem(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
