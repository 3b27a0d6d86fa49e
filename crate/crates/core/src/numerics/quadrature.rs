//! Globally adaptive Gauss–Kronrod quadrature.
//!
//! Each interval is evaluated with a nested 7-point Gauss / 15-point Kronrod
//! pair; the difference between the two rules estimates the local error. The
//! interval with the largest estimate is bisected until the summed estimate
//! meets `max(abs_tol, rel_tol * |integral|)` or the evaluation budget runs
//! out.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::SolverConfig;
use crate::error::{Error, Result};

// 15-point Kronrod abscissae (positive half) and weights, with the embedded
// 7-point Gauss weights. Gauss nodes are the odd-indexed abscissae plus the
// center. Literals carry the full published precision.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// Outcome of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    /// Summed per-interval error estimate; at most the requested tolerance on
    /// success.
    pub error_estimate: f64,
    /// Number of integrand evaluations spent.
    pub evaluations: usize,
}

struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// One Gauss–Kronrod 7/15 evaluation over `[a, b]`.
///
/// Returns `(kronrod value, error estimate, integral of |f|)`. The estimate is
/// `|K15 - G7|` floored at `50 * eps * resabs` so rounding noise never reads
/// as a claim of exactness.
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<(f64, f64, f64)> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let eval = |x: f64| -> Result<f64> {
        let fx = f(x);
        if !fx.is_finite() {
            return Err(Error::Domain(format!(
                "integrand returned a non-finite value at x = {x}"
            )));
        }
        Ok(fx)
    };

    let fc = eval(center)?;
    let mut resk = WGK[7] * fc;
    let mut resg = WG[3] * fc;
    let mut resabs = WGK[7] * fc.abs();
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = eval(center - dx)?;
        let f2 = eval(center + dx)?;
        resk += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            resg += WG[j / 2] * (f1 + f2);
        }
    }
    let value = resk * half;
    let raw = ((resk - resg) * half).abs();
    let floor = 50.0 * f64::EPSILON * (resabs * half.abs());
    Ok((value, raw.max(floor), resabs * half.abs()))
}

/// Adaptive integral of `f` over `[a, b]`.
///
/// On success `|result - true value| <= max(rel_tol * |true value|, abs_tol)`
/// for smooth integrands, and the reported estimate respects the same bound.
/// A non-finite integrand value is a domain error; running out of budget
/// yields [`Error::NonConvergence`] carrying the best estimate so far.
pub fn integrate_1d<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    cfg: &SolverConfig,
) -> Result<QuadratureResult> {
    cfg.validate()?;
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Validation(format!(
            "integration bounds must be finite, got [{a}, {b}]"
        )));
    }
    if a > b {
        return Err(Error::Validation(format!(
            "integration bounds must satisfy a <= b, got [{a}, {b}]"
        )));
    }
    if a == b {
        return Ok(QuadratureResult {
            value: 0.0,
            error_estimate: 0.0,
            evaluations: 0,
        });
    }

    let (value, error, _) = gk15(&f, a, b)?;
    let mut evaluations = 15usize;
    let mut heap = BinaryHeap::new();
    let mut sum_value = value;
    let mut sum_error = error;
    heap.push(Segment { a, b, value, error });

    loop {
        let tol = cfg.abs_tol.max(cfg.rel_tol * sum_value.abs());
        if sum_error <= tol {
            return Ok(QuadratureResult {
                value: sum_value,
                error_estimate: sum_error,
                evaluations,
            });
        }
        if evaluations + 30 > cfg.max_evaluations {
            return Err(Error::NonConvergence {
                evaluations,
                best: sum_value,
            });
        }
        let worst = heap.pop().expect("heap holds at least one segment");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // Interval already at machine width; the tolerance is unreachable.
            return Err(Error::NonConvergence {
                evaluations,
                best: sum_value,
            });
        }
        sum_value -= worst.value;
        sum_error -= worst.error;
        for (lo, hi) in [(worst.a, mid), (mid, worst.b)] {
            let (v, e, _) = gk15(&f, lo, hi)?;
            sum_value += v;
            sum_error += e;
            heap.push(Segment {
                a: lo,
                b: hi,
                value: v,
                error: e,
            });
        }
        evaluations += 30;
    }
}
