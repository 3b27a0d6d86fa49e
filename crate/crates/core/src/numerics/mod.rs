//! Generic numerical kernels: adaptive quadrature, bracketed root finding,
//! and an adaptive embedded Runge–Kutta integrator.
//!
//! The kernels are pure and reentrant; callers may run any number of them
//! concurrently. Callbacks supplied by callers must themselves be reentrant.

mod ode;
mod quadrature;
mod root;

pub use ode::{integrate_ode, OdeSolution};
pub use quadrature::{integrate_1d, QuadratureResult};
pub use root::find_root_monotone;

use crate::error::{Error, Result};

/// Tolerances and budgets shared by the iterative solvers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Relative tolerance. Defaults: 1e-10 for quadrature, 1e-9 for the ODE
    /// integrator (see [`SolverConfig::quadrature`] / [`SolverConfig::ode`]).
    pub rel_tol: f64,
    /// Absolute tolerance floor.
    pub abs_tol: f64,
    /// Budget of integrand/derivative evaluations before giving up.
    pub max_evaluations: usize,
    /// Relative width at which a root bracket counts as resolved.
    pub root_tol: f64,
    /// Multiplier used when expanding a search bracket.
    pub bracket_growth: f64,
}

impl SolverConfig {
    /// Defaults tuned for the quadrature kernel.
    pub fn quadrature() -> Self {
        SolverConfig {
            rel_tol: 1e-10,
            abs_tol: 1e-12,
            max_evaluations: 1_000_000,
            root_tol: 1e-12,
            bracket_growth: 2.0,
        }
    }

    /// Defaults tuned for the ODE integrator.
    pub fn ode() -> Self {
        SolverConfig {
            rel_tol: 1e-9,
            ..Self::quadrature()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("rel_tol", self.rel_tol),
            ("abs_tol", self.abs_tol),
            ("root_tol", self.root_tol),
        ];
        for (name, value) in positive {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::Validation(format!(
                    "{name} must be finite and positive, got {value}"
                )));
            }
        }
        if self.max_evaluations == 0 {
            return Err(Error::Validation("max_evaluations must be positive".into()));
        }
        if !(self.bracket_growth.is_finite() && self.bracket_growth > 1.0) {
            return Err(Error::Validation(format!(
                "bracket_growth must be > 1, got {}",
                self.bracket_growth
            )));
        }
        Ok(())
    }
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self::quadrature()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_defaults_and_validation() {
        assert_eq!(SolverConfig::default(), SolverConfig::quadrature());
        assert_eq!(SolverConfig::ode().rel_tol, 1e-9);
        assert!(SolverConfig::default().validate().is_ok());
        let bad = SolverConfig {
            rel_tol: 0.0,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
        let bad = SolverConfig {
            bracket_growth: 1.0,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
    }
}
