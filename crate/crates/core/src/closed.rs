//! Closed-form mass, velocity, and position solutions for power-law drag.
//!
//! With `phi(v) = lambda * v^alpha` the mass equations integrate explicitly.
//! Mass as a function of time:
//!
//! ```text
//! m(t) = m0 * exp(lambda * t / m0)                          alpha = 0
//! m(t) = m0 * (1 + lambda*alpha*v0^alpha * t / m0)^(1/alpha)  alpha > 0
//! ```
//!
//! and as a function of position:
//!
//! ```text
//! m(x) = m0 * exp(lambda * x / m0)                                   alpha = 1
//! m(x) = m0*v0 * (v0^(1-alpha) + lambda*(alpha-1)*x / m0)^(1/(alpha-1))  alpha != 1
//! ```
//!
//! Two structural facts follow directly. For `alpha = 0` the time-mass curve
//! does not involve `v0` at all, and for `alpha = 1` the position-mass curve
//! does not either. For `alpha < 1` the position curve has a pole at finite
//! `x`: the body sweeps up unbounded mass within a finite travel distance
//! (its maximum range) even though it never stops at any finite time.
//!
//! Branch selection at the case splits is an exact equality test on `alpha`;
//! the neighbouring branches agree in the limit, which the tests pin down.
//!
//! A body started at rest is an edge case worth spelling out. For
//! `alpha > 0`, `phi(0) = 0`, nothing accretes, and the mass stays `m0`
//! forever; position-keyed quantities are degenerate and return errors. For
//! `alpha = 0` the growth rate `lambda * m / m0` does not vanish at rest, so
//! the equations still grow the mass exponentially in time while the body
//! stands still; the time-keyed operations follow the equations.

use crate::error::{Error, Result};
use crate::model::{BodyState, Horizon, Method, Scenario, SolutionSeries};

fn power_law_params(s: &Scenario) -> Result<(f64, f64)> {
    s.drag.as_power_law().ok_or_else(|| {
        Error::UnsupportedLaw(
            "closed forms exist only for power-law drag; use the implicit solver".into(),
        )
    })
}

fn check_nonnegative(name: &str, value: f64) -> Result<()> {
    if !(value.is_finite() && value >= 0.0) {
        return Err(Error::Validation(format!(
            "{name} must be finite and nonnegative, got {value}"
        )));
    }
    Ok(())
}

/// Mass at time `t`. Equals `m0` at `t = 0` and is nondecreasing in `t`.
pub fn mass_at_time(s: &Scenario, t: f64) -> Result<f64> {
    let (lambda, alpha) = power_law_params(s)?;
    check_nonnegative("time", t)?;
    if alpha == 0.0 {
        // Independent of v0: growth continues even for a body at rest.
        return Ok(s.m0 * (lambda * t / s.m0).exp());
    }
    if s.v0 == 0.0 {
        return Ok(s.m0); // phi(0) = 0: nothing accretes
    }
    let growth = 1.0 + lambda * alpha * s.v0.powf(alpha) * t / s.m0;
    Ok(s.m0 * growth.powf(alpha.recip()))
}

/// Mass at position `x`. Requires `v0 > 0`; for `alpha < 1` also `x` strictly
/// below the maximum range.
pub fn mass_at_position(s: &Scenario, x: f64) -> Result<f64> {
    let (lambda, alpha) = power_law_params(s)?;
    check_nonnegative("position", x)?;
    if s.v0 == 0.0 {
        return Err(Error::DegenerateScenario(
            "v0 = 0: the body never moves, mass is not a function of position".into(),
        ));
    }
    if alpha == 1.0 {
        // Independent of v0.
        return Ok(s.m0 * (lambda * x / s.m0).exp());
    }
    let base = s.v0.powf(1.0 - alpha) + lambda * (alpha - 1.0) * x / s.m0;
    if alpha < 1.0 && base <= 0.0 {
        return Err(Error::RangeExceeded {
            x,
            max_range: max_range(s)?,
        });
    }
    Ok(s.m0 * s.v0 * base.powf((alpha - 1.0).recip()))
}

/// Velocity at time `t` from momentum conservation, `v = m0*v0 / m(t)`, with
/// the mass supplied by any evaluator for the same scenario (closed-form,
/// implicit inversion, or ODE). Evaluator errors propagate.
pub fn velocity_at_time<M>(s: &Scenario, t: f64, mass_at: M) -> Result<f64>
where
    M: FnOnce(&Scenario, f64) -> Result<f64>,
{
    let m = mass_at(s, t)?;
    if !(m.is_finite() && m > 0.0) {
        return Err(Error::Domain(format!(
            "mass evaluator returned a non-positive mass {m} at t = {t}"
        )));
    }
    Ok(s.momentum() / m)
}

/// Position at time `t`, the integral of `v = m0*v0/m` along the closed-form
/// mass curve. Zero at `t = 0`, nondecreasing, and for `alpha < 1` bounded by
/// the maximum range.
pub fn position_at_time(s: &Scenario, t: f64) -> Result<f64> {
    let (lambda, alpha) = power_law_params(s)?;
    check_nonnegative("time", t)?;
    if s.v0 == 0.0 {
        return Ok(0.0);
    }
    if alpha == 0.0 {
        return Ok(s.m0 * s.v0 / lambda * (1.0 - (-lambda * t / s.m0).exp()));
    }
    let c = lambda * alpha * s.v0.powf(alpha) / s.m0;
    if alpha == 1.0 {
        return Ok(s.m0 / lambda * (1.0 + c * t).ln());
    }
    Ok(
        s.m0 * s.v0.powf(1.0 - alpha) * ((1.0 + c * t).powf((alpha - 1.0) / alpha) - 1.0)
            / (lambda * (alpha - 1.0)),
    )
}

/// Inverse of [`mass_at_time`]: the time at which the mass reaches `m`.
pub fn time_to_reach_mass(s: &Scenario, m: f64) -> Result<f64> {
    let (lambda, alpha) = power_law_params(s)?;
    if !(m.is_finite() && m >= s.m0) {
        return Err(Error::Validation(format!(
            "target mass must be finite and >= m0 = {}, got {m}",
            s.m0
        )));
    }
    if alpha == 0.0 {
        return Ok(s.m0 / lambda * (m / s.m0).ln());
    }
    if s.v0 == 0.0 {
        if m == s.m0 {
            return Ok(0.0);
        }
        return Err(Error::NoSolution(
            "v0 = 0 with alpha > 0: the mass never grows".into(),
        ));
    }
    Ok(s.m0 * ((m / s.m0).powf(alpha) - 1.0) / (lambda * alpha * s.v0.powf(alpha)))
}

/// Time at which the mass reaches `2 * m0`.
///
/// `(m0/lambda) * ln 2` for `alpha = 0` (any `v0`, including rest), otherwise
/// `m0 * (2^alpha - 1) / (lambda * alpha * v0^alpha)` with `v0 > 0`.
pub fn doubling_time(s: &Scenario) -> Result<f64> {
    let (lambda, alpha) = power_law_params(s)?;
    if alpha == 0.0 {
        return Ok(s.m0 * std::f64::consts::LN_2 / lambda);
    }
    if s.v0 == 0.0 {
        return Err(Error::NoSolution(
            "v0 = 0 with alpha > 0: the mass never doubles".into(),
        ));
    }
    Ok(s.m0 * (2f64.powf(alpha) - 1.0) / (lambda * alpha * s.v0.powf(alpha)))
}

/// Distance after which the mass reaches `2 * m0`. Requires `v0 > 0`.
///
/// `(m0/lambda) * ln 2` for `alpha = 1`, otherwise
/// `m0 * v0^(1-alpha) * (2^(alpha-1) - 1) / (lambda * (alpha - 1))`, which is
/// positive for every `alpha >= 0` and below the maximum range when one
/// exists.
pub fn doubling_distance(s: &Scenario) -> Result<f64> {
    let (lambda, alpha) = power_law_params(s)?;
    if s.v0 == 0.0 {
        return Err(Error::DegenerateScenario(
            "v0 = 0: the body never moves".into(),
        ));
    }
    if alpha == 1.0 {
        return Ok(s.m0 * std::f64::consts::LN_2 / lambda);
    }
    Ok(s.m0 * s.v0.powf(1.0 - alpha) * (2f64.powf(alpha - 1.0) - 1.0) / (lambda * (alpha - 1.0)))
}

/// Total travel distance. Finite only for `alpha < 1`, where the
/// position-mass curve diverges at
/// `x = m0 * v0^(1-alpha) / (lambda * (1-alpha))`; returns `f64::INFINITY`
/// for `alpha >= 1`. Requires `v0 > 0`.
pub fn max_range(s: &Scenario) -> Result<f64> {
    let (lambda, alpha) = power_law_params(s)?;
    if s.v0 == 0.0 {
        return Err(Error::DegenerateScenario(
            "v0 = 0: the body never moves".into(),
        ));
    }
    if alpha >= 1.0 {
        return Ok(f64::INFINITY);
    }
    Ok(s.m0 * s.v0.powf(1.0 - alpha) / (lambda * (1.0 - alpha)))
}

/// Samples the closed-form trajectory on a uniform grid over `horizon`.
pub fn sample_series(
    s: &Scenario,
    horizon: Horizon,
    sample_count: usize,
) -> Result<SolutionSeries> {
    if sample_count < 2 {
        return Err(Error::Validation(format!(
            "sample_count must be at least 2, got {sample_count}"
        )));
    }
    horizon.validate()?;
    if let (Horizon::Position(x_end), Ok(range)) = (horizon, max_range(s)) {
        if x_end >= range {
            return Err(Error::RangeExceeded {
                x: x_end,
                max_range: range,
            });
        }
    }

    let end = horizon.end();
    let momentum = s.momentum();
    let mut states = Vec::with_capacity(sample_count);
    for i in 0..sample_count {
        let frac = i as f64 / (sample_count - 1) as f64;
        let state = if i == 0 {
            // The grid starts at zero; the initial condition is exact.
            BodyState {
                t: 0.0,
                x: 0.0,
                m: s.m0,
                v: s.v0,
            }
        } else {
            match horizon {
                Horizon::Time(_) => {
                    let t = end * frac;
                    let m = mass_at_time(s, t)?;
                    BodyState {
                        t,
                        x: position_at_time(s, t)?,
                        m,
                        v: momentum / m,
                    }
                }
                Horizon::Position(_) => {
                    let x = end * frac;
                    let m = mass_at_position(s, x)?;
                    BodyState {
                        t: time_to_reach_mass(s, m)?,
                        x,
                        m,
                        v: momentum / m,
                    }
                }
            }
        };
        states.push(state);
    }
    SolutionSeries::new(s.clone(), states, Method::ClosedForm, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drag::DragLaw;
    use crate::scenarios::{preset, Preset};

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
    }

    fn water(v0: f64) -> Scenario {
        preset(Preset::TableTennisWater, v0).unwrap()
    }

    fn air(v0: f64) -> Scenario {
        preset(Preset::TableTennisAir, v0).unwrap()
    }

    fn custom(m0: f64, v0: f64, lambda: f64, alpha: f64) -> Scenario {
        Scenario::new(m0, v0, DragLaw::power_law(lambda, alpha).unwrap(), "custom").unwrap()
    }

    #[test]
    fn mass_at_time_initial_condition_is_exact() {
        assert_eq!(mass_at_time(&water(1.0), 0.0).unwrap(), 0.0027);
        assert_eq!(mass_at_time(&air(10.0), 0.0).unwrap(), 0.0027);
    }

    #[test]
    fn water_mass_doubles_near_published_time() {
        // Published doubling time 4.93 s was computed with lambda rounded to
        // 0.000378; full precision gives 4.9396 and a mass ratio of 2 there.
        let m = mass_at_time(&water(1.0), 4.93).unwrap();
        assert!((m / 0.0054 - 1.0).abs() < 2e-3, "m(4.93) = {m}");
        let t_star = doubling_time(&water(1.0)).unwrap();
        assert!(rel(mass_at_time(&water(1.0), t_star).unwrap(), 2.0 * 0.0027) <= 1e-12);
    }

    #[test]
    fn air_mass_grows_linearly_in_time() {
        // alpha = 1 collapses to m(t) = m0 + lambda*v0*t.
        let s = air(10.0);
        let m = mass_at_time(&s, 1.0).unwrap();
        assert!(rel(m, 0.00618) <= 1e-12, "m(1) = {m}");
        for t in [0.3, 0.9, 2.7, 8.1] {
            let expected = 0.0027 + 0.000348 * 10.0 * t;
            assert!(rel(mass_at_time(&s, t).unwrap(), expected) <= 1e-13);
        }
    }

    #[test]
    fn mass_at_position_matches_published_curve() {
        assert_eq!(mass_at_position(&air(10.0), 0.0).unwrap(), 0.0027);
        // Water, v0 = 1: m(x) = m0*v0 / (v0 - lambda*x/m0); the published
        // curve 1/(370.37 - 51.97 x/v0) carries rounded coefficients.
        let s = water(1.0);
        let (lambda, _) = s.drag.as_power_law().unwrap();
        let m = mass_at_position(&s, 1.0).unwrap();
        let exact = s.m0 * s.v0 / (s.v0 - lambda * 1.0 / s.m0);
        assert!(rel(m, exact) <= 1e-12);
        assert!(rel(m, 1.0 / (370.37 - 51.97)) < 1e-4, "m(1) = {m}");
        // Air doubles after 5.3779 m (published as 5.37).
        let l_star = doubling_distance(&air(10.0)).unwrap();
        assert!((5.37..=5.38).contains(&l_star), "l** = {l_star}");
        let m = mass_at_position(&air(10.0), l_star).unwrap();
        assert!(rel(m, 0.0054) <= 1e-12);
    }

    #[test]
    fn velocity_follows_momentum_conservation() {
        let s = air(10.0);
        assert!(rel(velocity_at_time(&s, 0.0, mass_at_time).unwrap(), 10.0) <= 1e-15);
        let v = velocity_at_time(&s, 1.0, mass_at_time).unwrap();
        assert!(rel(v, 0.027 / 0.00618) <= 1e-12, "v(1) = {v}");
        // Water velocity decays exponentially; check against the composed form.
        let s = water(3.0);
        let (lambda, _) = s.drag.as_power_law().unwrap();
        for t in [0.5, 2.0, 10.0] {
            let v = velocity_at_time(&s, t, mass_at_time).unwrap();
            assert!(rel(v, 3.0 * (-lambda * t / s.m0).exp()) <= 1e-12);
        }
    }

    #[test]
    fn position_at_time_examples() {
        assert_eq!(position_at_time(&water(5.0), 0.0).unwrap(), 0.0);
        // Air, v0 = 10, t = 1: x = (m0/lambda) * ln(1 + lambda*v0*t/m0).
        let s = air(10.0);
        let x = position_at_time(&s, 1.0).unwrap();
        let expected = 0.0027 / 0.000348 * (1.0_f64 + 0.000348 * 10.0 / 0.0027).ln();
        assert!(rel(x, expected) <= 1e-13, "x(1) = {x}");
        assert!((x - 6.425).abs() < 1e-3);
        // Round trip: the mass at that position is the mass at that time.
        assert!(
            rel(
                mass_at_position(&s, x).unwrap(),
                mass_at_time(&s, 1.0).unwrap()
            ) <= 1e-12
        );
        // Water approaches its maximum range as t grows.
        let s = water(1.0);
        let range = max_range(&s).unwrap();
        assert!(rel(position_at_time(&s, 300.0).unwrap(), range) <= 1e-9);
        assert!(position_at_time(&s, 300.0).unwrap() <= range);
    }

    #[test]
    fn doubling_time_examples() {
        let t_star = doubling_time(&water(1.0)).unwrap();
        assert!((4.91..=4.96).contains(&t_star), "t* = {t_star}");
        // Constructed identity: alpha = 0 with lambda = m0 * ln 2 doubles at t = 1.
        let s = custom(0.4, 2.0, 0.4 * std::f64::consts::LN_2, 0.0);
        assert_eq!(doubling_time(&s).unwrap(), 1.0);
        // Air: t* = m0 / (lambda * v0).
        let t_star = doubling_time(&air(10.0)).unwrap();
        assert!(rel(t_star, 0.0027 / 0.00348) <= 1e-12);
        // Cross-check by inverting the mass curve.
        assert!(
            rel(
                time_to_reach_mass(&air(10.0), 2.0 * 0.0027).unwrap(),
                t_star
            ) <= 1e-12
        );
    }

    #[test]
    fn doubling_distance_examples() {
        let l = doubling_distance(&air(10.0)).unwrap();
        assert!((5.35..=5.40).contains(&l), "l** = {l}");
        // Constructed identity: alpha = 1 with lambda = m0 * ln 2 doubles at 1 m.
        let s = custom(0.4, 2.0, 0.4 * std::f64::consts::LN_2, 1.0);
        assert_eq!(doubling_distance(&s).unwrap(), 1.0);
        // Water: half the maximum range.
        let s = water(1.0);
        let l = doubling_distance(&s).unwrap();
        assert!(rel(l, max_range(&s).unwrap() / 2.0) <= 1e-12);
        assert!((l - 3.563).abs() < 1e-3);
        // Consistency with the position-mass curve.
        assert!(rel(mass_at_position(&s, l).unwrap(), 2.0 * s.m0) <= 1e-12);
    }

    #[test]
    fn max_range_examples() {
        let r = max_range(&water(1.0)).unwrap();
        assert!((r - 7.126).abs() < 1e-3, "range = {r}");
        assert!(max_range(&air(10.0)).unwrap().is_infinite());
        assert!(max_range(&custom(1.0, 1.0, 0.5, 2.0))
            .unwrap()
            .is_infinite());
        let r = max_range(&custom(1.0, 4.0, 0.001, 0.5)).unwrap();
        assert!(rel(r, 4000.0) <= 1e-12);
        // The mass just below the pole is enormous.
        let s = custom(1.0, 4.0, 0.001, 0.5);
        assert!(mass_at_position(&s, r * (1.0 - 1e-7)).unwrap() > 1e3 * s.m0);
    }

    #[test]
    fn rest_start_edge_cases() {
        let resting_air = air(0.0);
        assert_eq!(mass_at_time(&resting_air, 5.0).unwrap(), 0.0027);
        assert_eq!(position_at_time(&resting_air, 5.0).unwrap(), 0.0);
        assert!(matches!(
            doubling_time(&resting_air),
            Err(Error::NoSolution(_))
        ));
        assert!(matches!(
            mass_at_position(&resting_air, 1.0),
            Err(Error::DegenerateScenario(_))
        ));
        assert!(matches!(
            doubling_distance(&resting_air),
            Err(Error::DegenerateScenario(_))
        ));
        assert!(matches!(
            max_range(&resting_air),
            Err(Error::DegenerateScenario(_))
        ));
        // alpha = 0 still grows the mass at rest, but the body stays put.
        let resting_water = water(0.0);
        let m = mass_at_time(&resting_water, 4.93).unwrap();
        assert!((m / 0.0054 - 1.0).abs() < 2e-3);
        assert_eq!(position_at_time(&resting_water, 4.93).unwrap(), 0.0);
    }

    #[test]
    fn beyond_range_is_an_error_not_a_clamp() {
        let s = water(1.0);
        let range = max_range(&s).unwrap();
        assert!(matches!(
            mass_at_position(&s, range),
            Err(Error::RangeExceeded { .. })
        ));
        assert!(matches!(
            mass_at_position(&s, range * 2.0),
            Err(Error::RangeExceeded { .. })
        ));
    }

    #[test]
    fn tabulated_laws_are_rejected() {
        let law = DragLaw::tabulated(&[(0.0, 1.0), (10.0, 2.0)]).unwrap();
        let s = Scenario::new(1.0, 1.0, law, "tab").unwrap();
        assert!(matches!(
            mass_at_time(&s, 1.0),
            Err(Error::UnsupportedLaw(_))
        ));
        assert!(matches!(doubling_time(&s), Err(Error::UnsupportedLaw(_))));
    }

    #[test]
    fn momentum_identity_holds_to_machine_precision() {
        for alpha in [0.0, 0.5, 1.0, 2.0] {
            let s = custom(0.0027, 7.0, 4e-4, alpha);
            for t in [0.1, 1.0, 5.0, 40.0] {
                let m = mass_at_time(&s, t).unwrap();
                let v = velocity_at_time(&s, t, mass_at_time).unwrap();
                assert!(
                    rel(m * v, s.momentum()) <= 1e-12,
                    "alpha {alpha}, t {t}: m*v = {}",
                    m * v
                );
            }
        }
    }

    #[test]
    fn closed_forms_satisfy_the_mass_ode() {
        // Centered finite difference of m(t) against phi(m0*v0/m) * m / m0.
        for alpha in [0.0, 0.5, 1.0, 2.0] {
            let s = custom(0.0027, 7.0, 4e-4, alpha);
            for t in [0.5_f64, 1.0, 3.0, 10.0] {
                let h = 1e-6 * t.max(1.0);
                let m_plus = mass_at_time(&s, t + h).unwrap();
                let m_minus = mass_at_time(&s, t - h).unwrap();
                let fd = (m_plus - m_minus) / (2.0 * h);
                let m = mass_at_time(&s, t).unwrap();
                let rhs = s.drag.phi(s.momentum() / m).unwrap() * m / s.m0;
                assert!(
                    rel(fd, rhs) <= 1e-6,
                    "alpha {alpha}, t {t}: fd {fd} vs rhs {rhs}"
                );
            }
        }
    }

    #[test]
    fn time_mass_is_bitwise_v0_independent_for_stokes() {
        let reference: Vec<u64> = (1..=20)
            .map(|i| mass_at_time(&water(1.0), i as f64 * 0.7).unwrap().to_bits())
            .collect();
        for v0 in [5.0, 10.0] {
            for (i, bits) in reference.iter().enumerate() {
                let m = mass_at_time(&water(v0), (i + 1) as f64 * 0.7).unwrap();
                assert_eq!(m.to_bits(), *bits, "v0 = {v0}, sample {i}");
            }
        }
    }

    #[test]
    fn position_mass_is_bitwise_v0_independent_for_quadratic() {
        let reference: Vec<u64> = (1..=20)
            .map(|i| {
                mass_at_position(&air(1.0), i as f64 * 0.5)
                    .unwrap()
                    .to_bits()
            })
            .collect();
        for v0 in [5.0, 10.0] {
            for (i, bits) in reference.iter().enumerate() {
                let m = mass_at_position(&air(v0), (i + 1) as f64 * 0.5).unwrap();
                assert_eq!(m.to_bits(), *bits, "v0 = {v0}, sample {i}");
            }
        }
    }

    #[test]
    fn branches_are_continuous_at_the_case_splits() {
        // Position-mass branches around alpha = 1.
        for x in [0.5, 2.0, 5.0] {
            let at_one = mass_at_position(&custom(0.0027, 7.0, 4e-4, 1.0), x).unwrap();
            for da in [-1e-8, 1e-8] {
                let near = mass_at_position(&custom(0.0027, 7.0, 4e-4, 1.0 + da), x).unwrap();
                assert!(
                    rel(near, at_one) <= 1e-6,
                    "x {x}, alpha 1{da:+e}: {near} vs {at_one}"
                );
            }
        }
        // Time-mass branches around alpha = 0.
        for t in [0.5, 2.0, 5.0] {
            let at_zero = mass_at_time(&custom(0.0027, 7.0, 4e-4, 0.0), t).unwrap();
            let near = mass_at_time(&custom(0.0027, 7.0, 4e-4, 1e-8), t).unwrap();
            assert!(rel(near, at_zero) <= 1e-6, "t {t}: {near} vs {at_zero}");
        }
    }

    #[test]
    fn time_and_position_forms_agree_along_the_trajectory() {
        for alpha in [0.0, 0.5, 1.0, 2.0] {
            let s = custom(0.0027, 7.0, 4e-4, alpha);
            for t in [0.2, 1.0, 4.0, 9.0] {
                let x = position_at_time(&s, t).unwrap();
                let via_position = mass_at_position(&s, x).unwrap();
                let via_time = mass_at_time(&s, t).unwrap();
                assert!(
                    rel(via_position, via_time) <= 1e-9,
                    "alpha {alpha}, t {t}: {via_position} vs {via_time}"
                );
            }
        }
    }

    #[test]
    fn sample_series_over_both_horizons() {
        let s = water(1.0);
        let series = sample_series(&s, Horizon::Time(5.0), 11).unwrap();
        assert_eq!(series.states.len(), 11);
        assert_eq!(series.states[0].t, 0.0);
        assert_eq!(series.states[0].m, s.m0);
        assert_eq!(series.states[0].v, s.v0);
        assert_eq!(series.states.last().unwrap().t, 5.0);

        let series = sample_series(&s, Horizon::Position(5.0), 11).unwrap();
        assert_eq!(series.states.last().unwrap().x, 5.0);
        // Position horizons beyond the range are refused.
        assert!(matches!(
            sample_series(&s, Horizon::Position(8.0), 11),
            Err(Error::RangeExceeded { .. })
        ));
        assert!(sample_series(&s, Horizon::Time(5.0), 1).is_err());
    }
}
