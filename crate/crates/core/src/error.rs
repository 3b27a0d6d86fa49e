use thiserror::Error;

/// Errors produced by every layer of the crate, from drag-law evaluation to
/// the iterative solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input failed basic validation (non-finite, out of range, wrong shape).
    #[error("invalid input: {0}")]
    Validation(String),

    /// A function was evaluated outside its mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The operation has a closed form only for power-law drag.
    #[error("unsupported drag law: {0}")]
    UnsupportedLaw(String),

    /// The requested position lies at or beyond the body's finite travel range.
    #[error("position {x} m is at or beyond the maximum range {max_range} m")]
    RangeExceeded { x: f64, max_range: f64 },

    /// The scenario cannot support the requested quantity (typically v0 = 0).
    #[error("degenerate scenario: {0}")]
    DegenerateScenario(String),

    /// The requested event never occurs under the given dynamics.
    #[error("no solution: {0}")]
    NoSolution(String),

    /// Root bracketing failed: no sign change over the supplied interval.
    #[error("no sign change on [{lo}, {hi}]: g(lo) = {g_lo:e}, g(hi) = {g_hi:e}")]
    NoBracket {
        lo: f64,
        hi: f64,
        g_lo: f64,
        g_hi: f64,
    },

    /// An iterative solver exhausted its evaluation budget.
    #[error("failed to converge after {evaluations} evaluations (best estimate {best:e})")]
    NonConvergence { evaluations: usize, best: f64 },

    /// ODE step size underflowed, typically while approaching a singularity.
    #[error("step size underflow at t = {t} (singularity suspected)")]
    Singularity { t: f64 },

    /// The sample set carries no information about the parameters.
    #[error("unidentifiable sample set: {0}")]
    Unidentifiable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
