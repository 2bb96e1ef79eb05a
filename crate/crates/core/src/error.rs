use thiserror::Error;

/// Errors raised by the oscillator library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain where a formula is defined.
    #[error("parameter out of domain: {0}")]
    ParameterDomain(String),

    /// Evaluation was requested at a point where the quantity is singular.
    #[error("singular point at x = {x}: {what}")]
    SingularPoint { x: f64, what: &'static str },

    /// A grid or matrix could not be built from the given specification.
    #[error("construction error: {0}")]
    Construction(String),

    /// The refinement schedule ran out before reaching the requested tolerance.
    #[error("spectrum did not converge: best {best:?}, error estimates {estimate:?}")]
    NonConvergence { best: Vec<f64>, estimate: Vec<f64> },
}

pub type Result<T> = std::result::Result<T, Error>;
