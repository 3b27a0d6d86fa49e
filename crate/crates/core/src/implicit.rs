//! Implicit-integral solutions for arbitrary drag laws, their inversion, and
//! direct ODE integration of the mass equations.
//!
//! For a general positive `phi` the mass never leaves quadrature form. Time
//! and position are monotone integrals of the mass,
//!
//! ```text
//! t(m) = m0      * integral from m0 to m of ds / (s   * phi(m0*v0/s))
//! x(m) = m0^2*v0 * integral from m0 to m of ds / (s^2 * phi(m0*v0/s))
//! ```
//!
//! so mass at a given time or position is recovered by expanding a bracket
//! and running the monotone root finder on the corresponding integral. The
//! same trajectories can instead be integrated directly as ODEs,
//! `dm/dt = phi(m0*v0/m) * m / m0` with `dx/dt = m0*v0 / m`, which is what
//! [`integrate_trajectory`] does for the `ode` method. The two numeric routes
//! and the closed forms are interchangeable for power laws, which the tests
//! and the comparison command exploit.
//!
//! [`constant_mass_velocity`] integrates the ordinary constant-mass drag
//! equation `m0 * dv/dt = -phi(v) * v` instead. The accretion model is built
//! so that its velocity decay coincides with this constant-mass motion;
//! equality of `v(t)` and `m0*v0/m(t)` is the model's load-bearing identity
//! and is verified numerically in the acceptance suite.

use std::cell::RefCell;

use crate::closed;
use crate::error::{Error, Result};
use crate::model::{BodyState, Horizon, Method, Scenario, SolutionSeries};
use crate::numerics::{find_root_monotone, integrate_1d, integrate_ode, SolverConfig};

/// How far a bracket may expand (in units of `m0`) before inversion gives up.
const MAX_BRACKET_RATIO: f64 = (1u64 << 60) as f64;

/// Refusal band around the finite range pole: position inversion rejects
/// targets within this relative distance of the maximum range instead of
/// chasing the singularity.
const RANGE_GUARD: f64 = 1e-9;

/// A trajectory integration request.
#[derive(Debug, Clone, PartialEq)]
pub struct TrajectoryRequest {
    pub scenario: Scenario,
    pub horizon: Horizon,
    /// Number of equally spaced samples, at least 2 (the first is the initial
    /// condition).
    pub sample_count: usize,
    pub method: Method,
    pub cfg: SolverConfig,
}

impl TrajectoryRequest {
    pub fn validate(&self) -> Result<()> {
        self.scenario.validate()?;
        self.horizon.validate()?;
        self.cfg.validate()?;
        if self.sample_count < 2 {
            return Err(Error::Validation(format!(
                "sample_count must be at least 2, got {}",
                self.sample_count
            )));
        }
        if let Horizon::Position(x_end) = self.horizon {
            if let Ok(range) = closed::max_range(&self.scenario) {
                if x_end >= range {
                    return Err(Error::RangeExceeded {
                        x: x_end,
                        max_range: range,
                    });
                }
            }
        }
        Ok(())
    }
}

/// Shared plumbing: integrate `weight(s) / phi(m0*v0/s)` over `[m0, m]`,
/// capturing drag-law errors raised inside the integrand.
fn mass_integral<W>(s: &Scenario, m_target: f64, weight: W, cfg: &SolverConfig) -> Result<f64>
where
    W: Fn(f64) -> f64,
{
    let momentum = s.momentum();
    let captured: RefCell<Option<Error>> = RefCell::new(None);
    let integrand = |mass: f64| -> f64 {
        match s.drag.phi(momentum / mass) {
            Ok(phi) if phi > 0.0 => weight(mass) / phi,
            Ok(_) => {
                captured.borrow_mut().get_or_insert(Error::Domain(format!(
                    "drag coefficient vanishes at v = {} on the integration path; \
                     the mass never reaches the target",
                    momentum / mass
                )));
                f64::NAN
            }
            Err(e) => {
                captured.borrow_mut().get_or_insert(e);
                f64::NAN
            }
        }
    };
    let result = integrate_1d(integrand, s.m0, m_target, cfg);
    if let Some(e) = captured.into_inner() {
        return Err(e);
    }
    Ok(result?.value)
}

/// Time at which the mass reaches `m_target`, for any drag law.
///
/// Finite for every `m_target > m0` under power-law drag; errors if `phi`
/// vanishes anywhere on the integration path (for example a body at rest
/// with `alpha > 0`).
pub fn time_for_mass(s: &Scenario, m_target: f64, cfg: &SolverConfig) -> Result<f64> {
    s.validate()?;
    if !(m_target.is_finite() && m_target >= s.m0) {
        return Err(Error::Validation(format!(
            "target mass must be finite and >= m0 = {}, got {m_target}",
            s.m0
        )));
    }
    if m_target == s.m0 {
        return Ok(0.0);
    }
    let integral = mass_integral(s, m_target, |mass| 1.0 / mass, cfg)?;
    Ok(s.m0 * integral)
}

/// Position at which the mass reaches `m_target`, for any drag law.
/// Requires `v0 > 0`. For `alpha < 1` this converges to the maximum range as
/// `m_target` grows without bound.
pub fn position_for_mass(s: &Scenario, m_target: f64, cfg: &SolverConfig) -> Result<f64> {
    s.validate()?;
    if s.v0 == 0.0 {
        return Err(Error::DegenerateScenario(
            "v0 = 0: the body never moves".into(),
        ));
    }
    if !(m_target.is_finite() && m_target >= s.m0) {
        return Err(Error::Validation(format!(
            "target mass must be finite and >= m0 = {}, got {m_target}",
            s.m0
        )));
    }
    if m_target == s.m0 {
        return Ok(0.0);
    }
    let integral = mass_integral(s, m_target, |mass| 1.0 / (mass * mass), cfg)?;
    Ok(s.m0 * s.m0 * s.v0 * integral)
}

/// Inverts a monotone mass measure (time or position) by bracket expansion
/// followed by guarded root finding.
fn invert_mass_measure<F>(s: &Scenario, target: f64, measure: F, cfg: &SolverConfig) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let cap = s.m0 * MAX_BRACKET_RATIO;
    let mut lo = s.m0;
    let mut hi = 2.0 * s.m0;
    let mut expansions = 1usize;
    loop {
        let at_hi = measure(hi)?;
        if at_hi >= target {
            break;
        }
        if hi >= cap {
            return Err(Error::NonConvergence {
                evaluations: expansions,
                best: hi,
            });
        }
        lo = hi;
        hi = (hi * cfg.bracket_growth).min(cap);
        expansions += 1;
    }

    let captured: RefCell<Option<Error>> = RefCell::new(None);
    let g = |m: f64| -> f64 {
        match measure(m) {
            Ok(value) => value - target,
            Err(e) => {
                captured.borrow_mut().get_or_insert(e);
                f64::NAN
            }
        }
    };
    let root = find_root_monotone(g, lo, hi, cfg);
    if let Some(e) = captured.into_inner() {
        return Err(e);
    }
    root
}

/// Mass at time `t` by inverting the time integral. Agrees with the closed
/// form to better than 1e-8 relative for power laws.
pub fn mass_at_time_numeric(s: &Scenario, t: f64, cfg: &SolverConfig) -> Result<f64> {
    s.validate()?;
    if !(t.is_finite() && t >= 0.0) {
        return Err(Error::Validation(format!(
            "time must be finite and nonnegative, got {t}"
        )));
    }
    if t == 0.0 {
        return Ok(s.m0);
    }
    // A vanishing coefficient at the initial speed means nothing ever
    // accretes: the mass is constant for all time.
    if s.drag.phi(s.v0)? == 0.0 {
        return Ok(s.m0);
    }
    invert_mass_measure(s, t, |m| time_for_mass(s, m, cfg), cfg)
}

/// Mass at position `x` by inverting the position integral. Requires
/// `v0 > 0`; refuses positions within a relative `1e-9` of the finite range.
pub fn mass_at_position_numeric(s: &Scenario, x: f64, cfg: &SolverConfig) -> Result<f64> {
    s.validate()?;
    if !(x.is_finite() && x >= 0.0) {
        return Err(Error::Validation(format!(
            "position must be finite and nonnegative, got {x}"
        )));
    }
    if s.v0 == 0.0 {
        return Err(Error::DegenerateScenario(
            "v0 = 0: the body never moves".into(),
        ));
    }
    if x == 0.0 {
        return Ok(s.m0);
    }
    if let Ok(range) = closed::max_range(s) {
        if x >= range * (1.0 - RANGE_GUARD) {
            return Err(Error::RangeExceeded {
                x,
                max_range: range,
            });
        }
    }
    invert_mass_measure(s, x, |m| position_for_mass(s, m, cfg), cfg)
}

/// Integrates a trajectory over the requested horizon and sampling grid.
///
/// `implicit_inversion` inverts the quadrature form at every sample;
/// `ode` integrates the coupled `(m, x)` system (or `(m, t)` over a position
/// horizon) with dense output at the samples; `closed_form` delegates to the
/// closed-form sampler and requires a power law. Velocity is reported as
/// `m0*v0/m` at every sample.
pub fn integrate_trajectory(req: &TrajectoryRequest) -> Result<SolutionSeries> {
    req.validate()?;
    let s = &req.scenario;
    let n = req.sample_count;
    let end = req.horizon.end();
    let momentum = s.momentum();
    // Fraction first so the final grid point is exactly `end`.
    let grid: Vec<f64> = (0..n).map(|i| end * (i as f64 / (n - 1) as f64)).collect();

    let initial = BodyState {
        t: 0.0,
        x: 0.0,
        m: s.m0,
        v: s.v0,
    };

    let states: Vec<BodyState> = match req.method {
        Method::ClosedForm => return closed::sample_series(s, req.horizon, n),
        Method::ImplicitInversion => {
            let mut states = vec![initial];
            for &g in &grid[1..] {
                let state = match req.horizon {
                    Horizon::Time(_) => {
                        let m = mass_at_time_numeric(s, g, &req.cfg)?;
                        let x = if s.v0 == 0.0 {
                            0.0
                        } else {
                            position_for_mass(s, m, &req.cfg)?
                        };
                        BodyState {
                            t: g,
                            x,
                            m,
                            v: momentum / m,
                        }
                    }
                    Horizon::Position(_) => {
                        let m = mass_at_position_numeric(s, g, &req.cfg)?;
                        BodyState {
                            t: time_for_mass(s, m, &req.cfg)?,
                            x: g,
                            m,
                            v: momentum / m,
                        }
                    }
                };
                states.push(state);
            }
            states
        }
        Method::Ode => {
            let captured: RefCell<Option<Error>> = RefCell::new(None);
            let capture = |e: Error| {
                captured.borrow_mut().get_or_insert(e);
                f64::NAN
            };
            let solution = match req.horizon {
                Horizon::Time(t_end) => integrate_ode(
                    |_, y, dy| {
                        let m = y[0];
                        let phi = match s.drag.phi((momentum / m).max(0.0)) {
                            Ok(p) => p,
                            Err(e) => capture(e),
                        };
                        dy[0] = phi * m / s.m0;
                        dy[1] = momentum / m;
                    },
                    &[s.m0, 0.0],
                    (0.0, t_end),
                    &grid,
                    &req.cfg,
                ),
                Horizon::Position(x_end) => {
                    if s.v0 == 0.0 {
                        return Err(Error::DegenerateScenario(
                            "v0 = 0: the body never moves".into(),
                        ));
                    }
                    integrate_ode(
                        |_, y, dy| {
                            let m = y[0];
                            let phi = match s.drag.phi((momentum / m).max(0.0)) {
                                Ok(p) => p,
                                Err(e) => capture(e),
                            };
                            dy[0] = phi * m * m / (s.m0 * s.m0 * s.v0);
                            dy[1] = m / momentum;
                        },
                        &[s.m0, 0.0],
                        (0.0, x_end),
                        &grid,
                        &req.cfg,
                    )
                }
            };
            if let Some(e) = captured.into_inner() {
                return Err(e);
            }
            let solution = solution?;
            let mut states = Vec::with_capacity(n);
            for (i, (&g, y)) in solution.t.iter().zip(&solution.y).enumerate() {
                if i == 0 {
                    states.push(initial);
                    continue;
                }
                let m = y[0];
                let state = match req.horizon {
                    Horizon::Time(_) => BodyState {
                        t: g,
                        x: y[1],
                        m,
                        v: momentum / m,
                    },
                    Horizon::Position(_) => BodyState {
                        t: y[1],
                        x: g,
                        m,
                        v: momentum / m,
                    },
                };
                states.push(state);
            }
            states
        }
    };

    SolutionSeries::new(s.clone(), states, req.method, Some(req.cfg))
}

/// Velocity of the equivalent constant-mass body at time `t`, by integrating
/// `m0 * dv/dt = -phi(v) * v` directly.
pub fn constant_mass_velocity(s: &Scenario, t: f64, cfg: &SolverConfig) -> Result<f64> {
    s.validate()?;
    if !(t.is_finite() && t >= 0.0) {
        return Err(Error::Validation(format!(
            "time must be finite and nonnegative, got {t}"
        )));
    }
    if t == 0.0 {
        return Ok(s.v0);
    }
    let captured: RefCell<Option<Error>> = RefCell::new(None);
    let solution = integrate_ode(
        |_, y, dy| {
            dy[0] = match s.drag.force(y[0]) {
                Ok(force) => force / s.m0,
                Err(e) => {
                    captured.borrow_mut().get_or_insert(e);
                    f64::NAN
                }
            };
        },
        &[s.v0],
        (0.0, t),
        &[t],
        cfg,
    );
    if let Some(e) = captured.into_inner() {
        return Err(e);
    }
    Ok(solution?.y.last().expect("one sample requested")[0])
}
