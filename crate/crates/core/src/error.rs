use thiserror::Error;

/// Failure modes shared by every evaluator in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the region where the routine is defined.
    #[error("{name} = {value} is outside the domain ({requirement})")]
    Domain {
        name: &'static str,
        value: f64,
        requirement: &'static str,
    },

    /// A relation between several arguments does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Adaptive quadrature ran out of panels before reaching its tolerance.
    #[error("quadrature budget of {max_panels} panels exhausted on [{lo}, {hi}]")]
    Budget { max_panels: usize, lo: f64, hi: f64 },

    /// A monotone solver could not enclose the requested value.
    #[error("target {target} is not bracketed by [{lo}, {hi}]")]
    NoBracket { target: f64, lo: f64, hi: f64 },

    /// An iteration did not settle within its iteration cap.
    #[error("{what} did not converge after {iterations} iterations")]
    NoConvergence { what: &'static str, iterations: usize },

    /// A window that must contain sample points is empty.
    #[error("window [{lo}, {hi}] contains no points")]
    EmptyWindow { lo: f64, hi: f64 },

    /// Malformed configuration or parameter text.
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for failures caused by exhausting a numerical budget rather than by bad input.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget { .. } | Error::NoConvergence { .. })
    }
}

pub(crate) fn domain(name: &'static str, value: f64, requirement: &'static str) -> Error {
    Error::Domain {
        name,
        value,
        requirement,
    }
}
