use alloc::string::String;

/// Errors produced by the resummation and fixed-point machinery.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("quadrature failed to reach relative tolerance {tolerance:e} (value {value:e}, error estimate {error:e})")]
    QuadratureConvergence { tolerance: f64, value: f64, error: f64 },

    #[error("cancellation in a_{p},{n}: largest term / |result| = {ratio:e}")]
    Cancellation { p: usize, n: usize, ratio: f64 },

    #[error("no {what} found in [{lo}, {hi}]")]
    NotFound { what: &'static str, lo: f64, hi: f64 },

    #[error("large-order fit failed: {0}")]
    Fit(String),

    #[error("requested order {requested} exceeds the supported limit {limit}")]
    Resource { requested: usize, limit: usize },

    #[error("no convergence: {0}")]
    Convergence(String),
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
