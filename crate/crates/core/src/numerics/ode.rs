//! Adaptive explicit Runge–Kutta integration.
//!
//! The stepper is the Dormand–Prince 5(4) embedded pair: the 5th-order result
//! propagates, the embedded 4th-order result provides the per-step error
//! estimate, and the first-same-as-last property saves one derivative
//! evaluation per accepted step. Requested output times are hit exactly
//! through the method's 4th-order dense-output interpolant, never by
//! shortening steps.

use super::SolverConfig;
use crate::error::{Error, Result};

// Dormand–Prince 5(4) tableau.
const C: [f64; 7] = [0.0, 0.2, 0.3, 0.8, 8.0 / 9.0, 1.0, 1.0];
const A2: [f64; 1] = [0.2];
const A3: [f64; 2] = [3.0 / 40.0, 9.0 / 40.0];
const A4: [f64; 3] = [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0];
const A5: [f64; 4] = [
    19372.0 / 6561.0,
    -25360.0 / 2187.0,
    64448.0 / 6561.0,
    -212.0 / 729.0,
];
const A6: [f64; 5] = [
    9017.0 / 3168.0,
    -355.0 / 33.0,
    46732.0 / 5247.0,
    49.0 / 176.0,
    -5103.0 / 18656.0,
];
// 5th-order weights; also the coefficients of the 7th stage (FSAL).
const B5: [f64; 7] = [
    35.0 / 384.0,
    0.0,
    500.0 / 1113.0,
    125.0 / 192.0,
    -2187.0 / 6784.0,
    11.0 / 84.0,
    0.0,
];
// B5 - B4: weights of the embedded error estimate.
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];
// Dense-output coefficients of the 4th-order interpolant.
const D: [f64; 7] = [
    -12715105075.0 / 11282082432.0,
    0.0,
    87487479700.0 / 32700410799.0,
    -10690763975.0 / 1880347072.0,
    701980252875.0 / 199316789632.0,
    -1453857185.0 / 822651844.0,
    69997945.0 / 29380423.0,
];

const SAFETY: f64 = 0.9;
const MIN_FACTOR: f64 = 0.2;
const MAX_FACTOR: f64 = 5.0;

/// Samples of an ODE solution at the requested output times.
#[derive(Debug, Clone, PartialEq)]
pub struct OdeSolution {
    pub t: Vec<f64>,
    pub y: Vec<Vec<f64>>,
    pub steps_accepted: usize,
    pub steps_rejected: usize,
    pub evaluations: usize,
}

/// Integrates `dy/dt = f(t, y)` over `t_span`, sampling at `t_eval`.
///
/// `f` writes the derivative into its third argument. `t_eval` must be
/// nondecreasing and contained in `t_span`. Per-step error is controlled to
/// `max(rel_tol * |y|, abs_tol)` componentwise; a non-finite derivative is a
/// domain error, step underflow reports the last good time as a singularity,
/// and exceeding the evaluation budget is a non-convergence error.
pub fn integrate_ode<F>(
    mut f: F,
    y0: &[f64],
    t_span: (f64, f64),
    t_eval: &[f64],
    cfg: &SolverConfig,
) -> Result<OdeSolution>
where
    F: FnMut(f64, &[f64], &mut [f64]),
{
    cfg.validate()?;
    let (t0, tf) = t_span;
    if !(t0.is_finite() && tf.is_finite() && t0 <= tf) {
        return Err(Error::Validation(format!(
            "time span must be finite with t0 <= tf, got [{t0}, {tf}]"
        )));
    }
    if y0.is_empty() {
        return Err(Error::Validation(
            "state must have at least one component".into(),
        ));
    }
    for (i, &te) in t_eval.iter().enumerate() {
        if !(te.is_finite() && (t0..=tf).contains(&te)) {
            return Err(Error::Validation(format!(
                "t_eval[{i}] = {te} outside span [{t0}, {tf}]"
            )));
        }
        if i > 0 && te < t_eval[i - 1] {
            return Err(Error::Validation(format!(
                "t_eval must be nondecreasing, got {} after {}",
                te,
                t_eval[i - 1]
            )));
        }
    }

    let n = y0.len();
    let mut sol = OdeSolution {
        t: Vec::with_capacity(t_eval.len()),
        y: Vec::with_capacity(t_eval.len()),
        steps_accepted: 0,
        steps_rejected: 0,
        evaluations: 0,
    };
    let mut next_eval = 0usize;
    while next_eval < t_eval.len() && t_eval[next_eval] <= t0 {
        sol.t.push(t_eval[next_eval]);
        sol.y.push(y0.to_vec());
        next_eval += 1;
    }
    if t0 == tf {
        return Ok(sol);
    }

    let check_finite = |k: &[f64], t: f64| -> Result<()> {
        if k.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain(format!(
                "derivative returned a non-finite value at t = {t}"
            )));
        }
        Ok(())
    };

    let mut t = t0;
    let mut y = y0.to_vec();
    let mut k: [Vec<f64>; 7] = Default::default();
    for ki in &mut k {
        *ki = vec![0.0; n];
    }
    f(t, &y, &mut k[0]);
    sol.evaluations += 1;
    check_finite(&k[0], t)?;

    // Initial step guess; the controller takes over immediately.
    let mut h = 1e-3 * (tf - t0);
    let mut y_stage = vec![0.0; n];
    let mut y_new = vec![0.0; n];
    let mut last_rejected = false;

    while t < tf {
        if t + h == t {
            return Err(Error::Singularity { t });
        }
        if sol.evaluations + 6 > cfg.max_evaluations {
            return Err(Error::NonConvergence {
                evaluations: sol.evaluations,
                best: t,
            });
        }
        let mut h_used = h;
        if t + h_used > tf {
            h_used = tf - t;
        }

        let a_rows: [&[f64]; 5] = [&A2, &A3, &A4, &A5, &A6];
        for (s, row) in a_rows.iter().enumerate() {
            for i in 0..n {
                let mut acc = 0.0;
                for (j, aj) in row.iter().enumerate() {
                    acc += aj * k[j][i];
                }
                y_stage[i] = y[i] + h_used * acc;
            }
            f(t + C[s + 1] * h_used, &y_stage, &mut k[s + 1]);
            check_finite(&k[s + 1], t + C[s + 1] * h_used)?;
        }
        for i in 0..n {
            let mut acc = 0.0;
            for j in 0..6 {
                acc += B5[j] * k[j][i];
            }
            y_new[i] = y[i] + h_used * acc;
        }
        f(t + h_used, &y_new, &mut k[6]);
        sol.evaluations += 6;
        check_finite(&k[6], t + h_used)?;

        let mut err_sq = 0.0;
        for i in 0..n {
            let mut e = 0.0;
            for j in 0..7 {
                e += E[j] * k[j][i];
            }
            e *= h_used;
            let scale = cfg.abs_tol + cfg.rel_tol * y[i].abs().max(y_new[i].abs());
            err_sq += (e / scale) * (e / scale);
        }
        let err = (err_sq / n as f64).sqrt();

        if err <= 1.0 {
            let t_new = t + h_used;
            if next_eval < t_eval.len() && t_eval[next_eval] <= t_new {
                // Dense-output polynomial for this step (Hairer's contd5 form).
                let mut rcont = vec![[0.0; 5]; n];
                for (i, rc) in rcont.iter_mut().enumerate() {
                    let ydiff = y_new[i] - y[i];
                    let bspl = h_used * k[0][i] - ydiff;
                    let mut dacc = 0.0;
                    for j in 0..7 {
                        dacc += D[j] * k[j][i];
                    }
                    *rc = [
                        y[i],
                        ydiff,
                        bspl,
                        ydiff - h_used * k[6][i] - bspl,
                        h_used * dacc,
                    ];
                }
                while next_eval < t_eval.len() && t_eval[next_eval] <= t_new {
                    let theta = (t_eval[next_eval] - t) / h_used;
                    let mut yi = vec![0.0; n];
                    for (i, rc) in rcont.iter().enumerate() {
                        yi[i] = rc[0]
                            + theta
                                * (rc[1]
                                    + (1.0 - theta)
                                        * (rc[2] + theta * (rc[3] + (1.0 - theta) * rc[4])));
                    }
                    sol.t.push(t_eval[next_eval]);
                    sol.y.push(yi);
                    next_eval += 1;
                }
            }
            t = t_new;
            y.copy_from_slice(&y_new);
            k.swap(0, 6); // FSAL: last stage derivative becomes next k1
            sol.steps_accepted += 1;

            let factor = if err == 0.0 {
                MAX_FACTOR
            } else {
                (SAFETY * err.powf(-0.2)).clamp(MIN_FACTOR, MAX_FACTOR)
            };
            // No growth right after a rejection; avoids accept/reject cycling.
            let factor = if last_rejected {
                factor.min(1.0)
            } else {
                factor
            };
            h = h_used * factor;
            last_rejected = false;
        } else {
            sol.steps_rejected += 1;
            h = h_used * (SAFETY * err.powf(-0.2)).clamp(MIN_FACTOR, SAFETY);
            last_rejected = true;
        }
    }

    // Everything at or before tf has been emitted: the final accepted step
    // lands on tf exactly.
    debug_assert_eq!(next_eval, t_eval.len());
    Ok(sol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> SolverConfig {
        SolverConfig::ode()
    }

    #[test]
    fn exponential_growth_hits_e() {
        let sol =
            integrate_ode(|_, y, dy| dy[0] = y[0], &[1.0], (0.0, 1.0), &[1.0], &cfg()).unwrap();
        let got = sol.y[0][0];
        let rel = (got - std::f64::consts::E).abs() / std::f64::consts::E;
        assert!(rel <= 10.0 * cfg().rel_tol, "rel error {rel:e}");
    }

    #[test]
    fn constant_derivative_zero_stays_exact() {
        let sol = integrate_ode(
            |_, _, dy| dy[0] = 0.0,
            &[4.25],
            (0.0, 10.0),
            &[0.0, 3.7, 10.0],
            &cfg(),
        )
        .unwrap();
        for yi in &sol.y {
            assert_eq!(yi[0], 4.25);
        }
    }

    #[test]
    fn dense_output_matches_solution_between_steps() {
        // y' = cos t sampled at awkward interior points.
        let t_eval: Vec<f64> = (0..=40).map(|i| 1.7 * i as f64 / 40.0).collect();
        let sol = integrate_ode(
            |t, _, dy| dy[0] = t.cos(),
            &[0.0],
            (0.0, 1.7),
            &t_eval,
            &cfg(),
        )
        .unwrap();
        for (t, y) in sol.t.iter().zip(&sol.y) {
            assert!(
                (y[0] - t.sin()).abs() <= 1e-8,
                "t = {t}: got {}, want {}",
                y[0],
                t.sin()
            );
        }
    }

    #[test]
    fn halving_rel_tol_never_increases_error() {
        // Oracle-checked tolerance ladder on the exponential test problem.
        let mut rel_tol = 1e-4;
        let mut prev_err = f64::INFINITY;
        for _ in 0..5 {
            let c = SolverConfig {
                rel_tol,
                abs_tol: rel_tol * 1e-3,
                ..SolverConfig::ode()
            };
            let sol =
                integrate_ode(|_, y, dy| dy[0] = y[0], &[1.0], (0.0, 2.0), &[2.0], &c).unwrap();
            let err = (sol.y[0][0] - 2.0f64.exp()).abs();
            assert!(
                err <= prev_err,
                "error rose from {prev_err:e} to {err:e} at rel_tol {rel_tol:e}"
            );
            prev_err = err;
            rel_tol *= 0.5;
        }
    }

    #[test]
    fn observed_order_on_linear_equation_is_at_least_four() {
        // Drive the raw tableau at fixed step on y' = y over [0, 1]; halving h
        // must cut the error by at least 2^4.
        let run = |steps: usize| -> f64 {
            let h = 1.0 / steps as f64;
            let mut y = 1.0;
            for _ in 0..steps {
                let mut k = [0.0f64; 7];
                k[0] = y;
                let stages: [&[f64]; 5] = [&A2, &A3, &A4, &A5, &A6];
                for (s, row) in stages.iter().enumerate() {
                    let mut acc = 0.0;
                    for (j, aj) in row.iter().enumerate() {
                        acc += aj * k[j];
                    }
                    k[s + 1] = y + h * acc;
                }
                let mut acc = 0.0;
                for j in 0..6 {
                    acc += B5[j] * k[j];
                }
                y += h * acc;
            }
            (y - 1.0f64.exp()).abs()
        };
        let e1 = run(20);
        let e2 = run(40);
        let order = (e1 / e2).log2();
        assert!(order >= 4.0, "observed order {order}");
    }

    #[test]
    fn blowup_reports_singularity() {
        // y' = y^2 from y(0) = 1 diverges at t = 1.
        let result = integrate_ode(
            |_, y, dy| dy[0] = y[0] * y[0],
            &[1.0],
            (0.0, 2.0),
            &[],
            &cfg(),
        );
        match result {
            Err(Error::Singularity { t }) => {
                assert!((t - 1.0).abs() < 0.05, "underflow reported at t = {t}");
            }
            Err(Error::Domain(_)) | Err(Error::NonConvergence { .. }) => {}
            other => panic!("expected failure near t = 1, got {other:?}"),
        }
    }

    #[test]
    fn rejects_out_of_span_eval_points() {
        let r = integrate_ode(|_, y, dy| dy[0] = y[0], &[1.0], (0.0, 1.0), &[1.5], &cfg());
        assert!(matches!(r, Err(Error::Validation(_))));
    }
}
