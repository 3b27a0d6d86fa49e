//! Bracketed root finding for monotone functions.

use super::SolverConfig;
use crate::error::{Error, Result};

/// Finds the root of a monotone continuous `g` inside `[lo, hi]`.
///
/// `g(lo)` and `g(hi)` must straddle zero (or one of them be zero). The
/// iteration is a secant/bisection hybrid: a secant candidate is used while it
/// keeps shrinking the bracket geometrically, otherwise the next step bisects.
/// The bracket is retained throughout, its width strictly decreases, and `g`
/// is never evaluated outside `[lo, hi]`. Returns the bracket midpoint once
/// the relative width drops below `cfg.root_tol`.
pub fn find_root_monotone<G>(mut g: G, lo: f64, hi: f64, cfg: &SolverConfig) -> Result<f64>
where
    G: FnMut(f64) -> f64,
{
    cfg.validate()?;
    if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
        return Err(Error::Validation(format!(
            "bracket must be finite with lo <= hi, got [{lo}, {hi}]"
        )));
    }

    let mut eval = |x: f64, n: &mut usize| -> Result<f64> {
        *n += 1;
        let gx = g(x);
        if gx.is_nan() {
            return Err(Error::Domain(format!("g returned NaN at x = {x}")));
        }
        Ok(gx)
    };

    let mut evaluations = 0usize;
    let mut a = lo;
    let mut b = hi;
    let mut ga = eval(a, &mut evaluations)?;
    if ga == 0.0 {
        return Ok(a);
    }
    let mut gb = eval(b, &mut evaluations)?;
    if gb == 0.0 {
        return Ok(b);
    }
    if ga.signum() == gb.signum() {
        return Err(Error::NoBracket {
            lo,
            hi,
            g_lo: ga,
            g_hi: gb,
        });
    }

    let mut force_bisect = false;
    loop {
        let width = b - a;
        let scale = a.abs().max(b.abs());
        if width <= cfg.root_tol * scale || width == 0.0 {
            return Ok(0.5 * (a + b));
        }
        if evaluations >= cfg.max_evaluations {
            return Err(Error::NonConvergence {
                evaluations,
                best: 0.5 * (a + b),
            });
        }

        let mid = a + 0.5 * width;
        let x = if force_bisect {
            mid
        } else {
            let secant = b - gb * (b - a) / (gb - ga);
            if secant.is_finite() && secant > a && secant < b {
                secant
            } else {
                mid
            }
        };
        if x <= a || x >= b {
            // Width is down to a few ulps; the midpoint is as good as it gets.
            return Ok(mid);
        }
        let gx = eval(x, &mut evaluations)?;
        if gx == 0.0 {
            return Ok(x);
        }
        if gx.signum() == ga.signum() {
            a = x;
            ga = gx;
        } else {
            b = x;
            gb = gx;
        }
        // If the secant step failed to halve the bracket, bisect next time so
        // convergence stays geometric.
        force_bisect = (b - a) > 0.5 * width;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    #[test]
    fn finds_simple_root() {
        let r = find_root_monotone(|x| x * x - 4.0, 0.0, 3.0, &cfg()).unwrap();
        assert!((r - 2.0).abs() <= 2.0 * cfg().root_tol * 3.0);
    }

    #[test]
    fn returns_endpoint_roots_exactly() {
        let r = find_root_monotone(|x| x - 1.5, 1.5, 9.0, &cfg()).unwrap();
        assert_eq!(r, 1.5);
        let r = find_root_monotone(|x| x - 9.0, 1.5, 9.0, &cfg()).unwrap();
        assert_eq!(r, 9.0);
    }

    #[test]
    fn rejects_brackets_without_sign_change() {
        assert!(matches!(
            find_root_monotone(|x| x + 10.0, 0.0, 1.0, &cfg()),
            Err(Error::NoBracket { .. })
        ));
    }

    #[test]
    fn never_evaluates_outside_bracket() {
        let (lo, hi) = (0.25, 7.0);
        let r = find_root_monotone(
            |x| {
                assert!((lo..=hi).contains(&x), "evaluated outside bracket: {x}");
                x.ln() - 1.0
            },
            lo,
            hi,
            &cfg(),
        )
        .unwrap();
        assert!((r - std::f64::consts::E).abs() < 1e-10);
    }

    #[test]
    fn handles_steep_and_flat_monotone_functions() {
        // Steep: secant alone would crawl; the bisection fallback keeps the
        // bracket shrinking geometrically.
        let r = find_root_monotone(|x: f64| x.powi(9) - 0.5, 0.0, 1.0, &cfg()).unwrap();
        assert!((r - 0.5f64.powf(1.0 / 9.0)).abs() < 1e-10);
        let r = find_root_monotone(|x: f64| (x - 0.2).atan(), -40.0, 40.0, &cfg()).unwrap();
        assert!((r - 0.2).abs() < 1e-9);
    }

    #[test]
    fn respects_evaluation_budget() {
        let starved = SolverConfig {
            max_evaluations: 4,
            ..SolverConfig::default()
        };
        assert!(matches!(
            find_root_monotone(|x| x - 0.3, 0.0, 1e9, &starved),
            Err(Error::NonConvergence { .. })
        ));
    }

    #[test]
    fn nan_is_a_domain_error() {
        assert!(matches!(
            find_root_monotone(|_| f64::NAN, 0.0, 1.0, &cfg()),
            Err(Error::Domain(_))
        ));
    }
}
