//! Problem statement and trajectory containers.
//!
//! The model: a body of initial mass `m0` and initial velocity `v0 >= 0`
//! moves through a medium whose particles are at rest. Every particle the
//! body sweeps up sticks to it, so the pair (body + accreted matter) keeps
//! the initial momentum:
//!
//! ```text
//! m(t) * v(t) = m0 * v0
//! ```
//!
//! and the mass grows at the rate set by the drag coefficient,
//! `dm/dt = phi(m0*v0/m) * m / m0`. All solvers in this crate are different
//! routes to the same trajectory `(t, x, m, v)`.

use crate::drag::DragLaw;
use crate::error::{Error, Result};
use crate::numerics::SolverConfig;

/// A complete problem statement: initial state plus drag law.
///
/// The medium velocity is identically zero by construction (particles are at
/// rest before they are swept up); it is a model-level constant, not a field.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    /// Initial mass, kg, `> 0`.
    pub m0: f64,
    /// Initial velocity, m/s, `>= 0`.
    pub v0: f64,
    pub drag: DragLaw,
    pub label: String,
}

impl Scenario {
    pub fn new(m0: f64, v0: f64, drag: DragLaw, label: impl Into<String>) -> Result<Self> {
        let s = Scenario {
            m0,
            v0,
            drag,
            label: label.into(),
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.m0.is_finite() && self.m0 > 0.0) {
            return Err(Error::Validation(format!(
                "initial mass must be finite and positive, got {}",
                self.m0
            )));
        }
        if !(self.v0.is_finite() && self.v0 >= 0.0) {
            return Err(Error::Validation(format!(
                "initial velocity must be finite and nonnegative, got {}",
                self.v0
            )));
        }
        self.drag.validate()
    }

    /// The conserved momentum `m0 * v0`, kg·m/s.
    pub fn momentum(&self) -> f64 {
        self.m0 * self.v0
    }
}

/// One sample of the motion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BodyState {
    /// Time, s.
    pub t: f64,
    /// Position, m.
    pub x: f64,
    /// Mass, kg.
    pub m: f64,
    /// Velocity, m/s.
    pub v: f64,
}

impl BodyState {
    pub fn momentum(&self) -> f64 {
        self.m * self.v
    }
}

/// Solution route that produced a series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    ImplicitInversion,
    Ode,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::ClosedForm => "closed_form",
            Method::ImplicitInversion => "implicit_inversion",
            Method::Ode => "ode",
        })
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" | "closed_form" => Ok(Method::ClosedForm),
            "implicit" | "implicit_inversion" => Ok(Method::ImplicitInversion),
            "ode" => Ok(Method::Ode),
            other => Err(Error::Validation(format!(
                "unknown method '{other}' (expected closed, implicit, or ode)"
            ))),
        }
    }
}

/// Extent of a trajectory: either a final time or a final position.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Horizon {
    /// Integrate to `t = t_end` (s).
    Time(f64),
    /// Integrate to `x = x_end` (m).
    Position(f64),
}

impl Horizon {
    pub fn end(&self) -> f64 {
        match self {
            Horizon::Time(t) => *t,
            Horizon::Position(x) => *x,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let end = self.end();
        if !(end.is_finite() && end > 0.0) {
            return Err(Error::Validation(format!(
                "horizon must be finite and positive, got {end}"
            )));
        }
        Ok(())
    }
}

/// An ordered trajectory plus the solver settings that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionSeries {
    pub scenario: Scenario,
    pub states: Vec<BodyState>,
    pub method: Method,
    /// Solver settings used; `None` for closed-form sampling.
    pub tolerances: Option<SolverConfig>,
}

impl SolutionSeries {
    /// Builds a series, checking the ordering invariants: `t` strictly
    /// increasing, `m` nondecreasing, `v` nonincreasing.
    // Negated comparisons are deliberate: NaN anywhere must fail validation.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn new(
        scenario: Scenario,
        states: Vec<BodyState>,
        method: Method,
        tolerances: Option<SolverConfig>,
    ) -> Result<Self> {
        for w in states.windows(2) {
            if !(w[1].t > w[0].t) {
                return Err(Error::Validation(format!(
                    "series times must be strictly increasing: {} then {}",
                    w[0].t, w[1].t
                )));
            }
            if !(w[1].m >= w[0].m) {
                return Err(Error::Validation(format!(
                    "series mass must be nondecreasing: {} then {}",
                    w[0].m, w[1].m
                )));
            }
            if !(w[1].v <= w[0].v) {
                return Err(Error::Validation(format!(
                    "series velocity must be nonincreasing: {} then {}",
                    w[0].v, w[1].v
                )));
            }
        }
        Ok(SolutionSeries {
            scenario,
            states,
            method,
            tolerances,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn state(t: f64, m: f64, v: f64) -> BodyState {
        BodyState { t, x: 0.0, m, v }
    }

    #[test]
    fn scenario_validation() {
        let law = DragLaw::power_law(1.0, 1.0).unwrap();
        assert!(Scenario::new(1.0, 0.0, law.clone(), "ok").is_ok());
        assert!(Scenario::new(0.0, 1.0, law.clone(), "bad m0").is_err());
        assert!(Scenario::new(1.0, -1.0, law, "bad v0").is_err());
    }

    #[test]
    fn method_round_trips_through_text() {
        for m in [Method::ClosedForm, Method::ImplicitInversion, Method::Ode] {
            assert_eq!(m.to_string().parse::<Method>().unwrap(), m);
        }
        assert_eq!("closed".parse::<Method>().unwrap(), Method::ClosedForm);
        assert_eq!(
            "implicit".parse::<Method>().unwrap(),
            Method::ImplicitInversion
        );
        assert!("rk4".parse::<Method>().is_err());
    }

    #[test]
    fn series_rejects_disordered_states() {
        let law = DragLaw::power_law(1.0, 0.0).unwrap();
        let s = Scenario::new(1.0, 1.0, law, "t").unwrap();
        let bad_t = vec![state(0.0, 1.0, 1.0), state(0.0, 2.0, 0.5)];
        assert!(SolutionSeries::new(s.clone(), bad_t, Method::ClosedForm, None).is_err());
        let bad_m = vec![state(0.0, 2.0, 1.0), state(1.0, 1.0, 0.5)];
        assert!(SolutionSeries::new(s.clone(), bad_m, Method::ClosedForm, None).is_err());
        let bad_v = vec![state(0.0, 1.0, 0.5), state(1.0, 2.0, 1.0)];
        assert!(SolutionSeries::new(s.clone(), bad_v, Method::ClosedForm, None).is_err());
        let ok = vec![state(0.0, 1.0, 1.0), state(1.0, 2.0, 0.5)];
        assert!(SolutionSeries::new(s, ok, Method::ClosedForm, None).is_ok());
    }
}
