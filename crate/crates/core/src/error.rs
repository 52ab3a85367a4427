use thiserror::Error;

/// Errors raised by the evaluators in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum KurepaError {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("gamma pole at non-positive integer x = {0}")]
    Pole(f64),

    #[error("overflow: argument {0} exceeds the representable range")]
    Overflow(f64),

    #[error("quadrature tolerance not met: value {value:e}, error estimate {abs_err:e} after {subdivisions} subdivisions")]
    ToleranceNotMet {
        value: f64,
        abs_err: f64,
        subdivisions: usize,
    },

    #[error("convergence failure: {0}")]
    Convergence(String),

    #[error("inconsistent sign classification at x = {x}: expected {expected}, quadrature gave {value:e}")]
    Inconsistency {
        x: f64,
        expected: &'static str,
        value: f64,
    },
}

pub type Result<T> = std::result::Result<T, KurepaError>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(KurepaError::Domain(msg.into()))
}
