use crate::C64;

/// Errors raised by the numerical kernels.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("{function} has a pole at {at}")]
    Pole { function: &'static str, at: C64 },

    #[error("{function}: {reason}")]
    Domain {
        function: &'static str,
        reason: &'static str,
    },

    #[error("no convergence after {evaluations} evaluations (error estimate {estimate:e}, target {target:e})")]
    Convergence {
        evaluations: usize,
        estimate: f64,
        target: f64,
    },

    #[error("integral diverges: decay exponent {decay} must exceed 1")]
    Divergence { decay: f64 },

    #[error("contour Re z = {c} passes within {clearance:e} of a pole")]
    PoleTooClose { c: f64, clearance: f64 },

    #[error("invalid configuration: {0}")]
    Config(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
