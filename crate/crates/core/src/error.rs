use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("derivative unavailable at omega = {omega}: {reason}")]
    DerivativeUnavailable { omega: f64, reason: String },

    #[error("model validation failed: {0}")]
    ValidationFailed(String),

    #[error("quadrature did not reach tolerance after {evaluations} evaluations (|value| {magnitude:e}, error estimate {error_estimate:e})")]
    ToleranceNotReached {
        magnitude: f64,
        error_estimate: f64,
        evaluations: usize,
    },

    #[error("integrand growth exceeds the declared polynomial majorant of degree {degree}")]
    GrowthBoundExceeded { degree: u32 },

    #[error("grid too coarse: {0}")]
    GridTooCoarse(String),

    #[error("extrapolation unstable: {0}")]
    ExtrapolationUnstable(String),

    #[error("reflection bandwidth diverges for a model without a transparency cutoff")]
    DivergentBandwidth,

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
