//! Drag-coefficient laws and their evaluation.
//!
//! A drag law is the coefficient function `phi(v)` in the resistive force
//! `F = -phi(v) * v`. The classical power-law family
//!
//! ```text
//! phi(v) = lambda * v^alpha
//! ```
//!
//! covers the two standard regimes: `alpha = 0` gives force proportional to
//! speed (Stokes drag) and `alpha = 1` gives force proportional to the square
//! of the speed. `lambda` carries units of kg·s^(alpha−1)·m^(−alpha), so it is
//! kg/s for the Stokes case and kg/m for the quadratic case. Arbitrary
//! positive coefficient curves are supported through monotone cubic
//! interpolation of tabulated samples; tabulated laws are never extrapolated.

use crate::error::{Error, Result};

/// The drag coefficient `phi(v)` appearing in `F = -phi(v) * v`.
#[derive(Debug, Clone, PartialEq)]
pub enum DragLaw {
    /// `phi(v) = lambda * v^alpha`, with `lambda > 0` and `alpha >= 0`.
    PowerLaw { lambda: f64, alpha: f64 },
    /// `phi` interpolated from tabulated `(v, phi)` samples.
    Tabulated(TabulatedPhi),
}

impl DragLaw {
    /// Power-law drag `phi(v) = lambda * v^alpha`. Validates `lambda > 0`,
    /// `alpha >= 0`.
    pub fn power_law(lambda: f64, alpha: f64) -> Result<Self> {
        let law = DragLaw::PowerLaw { lambda, alpha };
        law.validate()?;
        Ok(law)
    }

    /// Tabulated drag coefficient; see [`TabulatedPhi::new`].
    pub fn tabulated(samples: &[(f64, f64)]) -> Result<Self> {
        Ok(DragLaw::Tabulated(TabulatedPhi::new(samples)?))
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            DragLaw::PowerLaw { lambda, alpha } => {
                if !(lambda.is_finite() && *lambda > 0.0) {
                    return Err(Error::Validation(format!(
                        "drag coefficient lambda must be finite and positive, got {lambda}"
                    )));
                }
                if !(alpha.is_finite() && *alpha >= 0.0) {
                    return Err(Error::Validation(format!(
                        "drag exponent alpha must be finite and nonnegative, got {alpha}"
                    )));
                }
                Ok(())
            }
            DragLaw::Tabulated(tab) => tab.validate(),
        }
    }

    /// Evaluates `phi(v)` for a speed `v >= 0`.
    ///
    /// For power laws `0^0` is taken as 1, so `alpha = 0` means a constant
    /// coefficient `lambda` down to and including rest. Tabulated laws error
    /// outside their sample domain instead of extrapolating.
    pub fn phi(&self, v: f64) -> Result<f64> {
        if !(v.is_finite() && v >= 0.0) {
            return Err(Error::Domain(format!(
                "phi(v) requires a finite speed v >= 0, got {v}"
            )));
        }
        match self {
            DragLaw::PowerLaw { lambda, alpha } => {
                // Exact branch on alpha == 0 keeps the Stokes case independent
                // of v down to v = 0.
                if *alpha == 0.0 {
                    Ok(*lambda)
                } else {
                    Ok(lambda * v.powf(*alpha))
                }
            }
            DragLaw::Tabulated(tab) => tab.eval(v),
        }
    }

    /// Drag force on a body moving with signed velocity `v`:
    /// `F = -phi(|v|) * v`. Always opposes the motion.
    pub fn force(&self, v: f64) -> Result<f64> {
        Ok(-self.phi(v.abs())? * v)
    }

    /// `(lambda, alpha)` if this is a power law.
    pub fn as_power_law(&self) -> Option<(f64, f64)> {
        match self {
            DragLaw::PowerLaw { lambda, alpha } => Some((*lambda, *alpha)),
            DragLaw::Tabulated(_) => None,
        }
    }
}

/// A drag coefficient given by samples `(v_i, phi_i)` with `v` strictly
/// increasing and every `phi_i > 0`, interpolated by a monotone
/// piecewise-cubic (Fritsch–Carlson). The shape-preserving slopes keep the
/// interpolant inside the hull of neighbouring samples, so positivity of the
/// data survives interpolation. Evaluation outside `[v_first, v_last]` is a
/// domain error.
#[derive(Debug, Clone, PartialEq)]
pub struct TabulatedPhi {
    v: Vec<f64>,
    phi: Vec<f64>,
    slope: Vec<f64>,
}

impl TabulatedPhi {
    pub fn new(samples: &[(f64, f64)]) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::Validation(format!(
                "tabulated drag law needs at least 2 samples, got {}",
                samples.len()
            )));
        }
        let v: Vec<f64> = samples.iter().map(|s| s.0).collect();
        let phi: Vec<f64> = samples.iter().map(|s| s.1).collect();
        for (i, (&vi, &pi)) in v.iter().zip(&phi).enumerate() {
            if !(vi.is_finite() && vi >= 0.0) {
                return Err(Error::Validation(format!(
                    "sample {i}: speed must be finite and >= 0, got {vi}"
                )));
            }
            if !(pi.is_finite() && pi > 0.0) {
                return Err(Error::Validation(format!(
                    "sample {i}: phi must be finite and > 0, got {pi}"
                )));
            }
            if i > 0 && vi <= v[i - 1] {
                return Err(Error::Validation(format!(
                    "sample speeds must be strictly increasing, v[{}] = {} after {}",
                    i,
                    vi,
                    v[i - 1]
                )));
            }
        }
        let slope = pchip_slopes(&v, &phi);
        Ok(TabulatedPhi { v, phi, slope })
    }

    pub fn validate(&self) -> Result<()> {
        // Construction is the only entry point, so stored tables are valid.
        Ok(())
    }

    /// Interpolation domain `[v_first, v_last]`.
    pub fn domain(&self) -> (f64, f64) {
        (self.v[0], *self.v.last().unwrap())
    }

    fn eval(&self, x: f64) -> Result<f64> {
        let (lo, hi) = self.domain();
        if x < lo || x > hi {
            return Err(Error::Domain(format!(
                "speed {x} outside tabulated domain [{lo}, {hi}] (no extrapolation)"
            )));
        }
        // Index of the interval containing x.
        let i = match self.v.partition_point(|&vi| vi <= x) {
            0 => 0,
            k if k >= self.v.len() => self.v.len() - 2,
            k => k - 1,
        };
        let h = self.v[i + 1] - self.v[i];
        let t = (x - self.v[i]) / h;
        let t2 = t * t;
        let t3 = t2 * t;
        let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
        let h10 = t3 - 2.0 * t2 + t;
        let h01 = -2.0 * t3 + 3.0 * t2;
        let h11 = t3 - t2;
        Ok(h00 * self.phi[i]
            + h10 * h * self.slope[i]
            + h01 * self.phi[i + 1]
            + h11 * h * self.slope[i + 1])
    }
}

/// Fritsch–Carlson shape-preserving slopes for cubic Hermite interpolation.
fn pchip_slopes(x: &[f64], y: &[f64]) -> Vec<f64> {
    let n = x.len();
    let h: Vec<f64> = (0..n - 1).map(|i| x[i + 1] - x[i]).collect();
    let delta: Vec<f64> = (0..n - 1).map(|i| (y[i + 1] - y[i]) / h[i]).collect();
    if n == 2 {
        return vec![delta[0], delta[0]];
    }
    let mut d = vec![0.0; n];
    for i in 1..n - 1 {
        let (s0, s1) = (delta[i - 1], delta[i]);
        if s0 * s1 <= 0.0 {
            d[i] = 0.0; // local extremum: flat tangent prevents overshoot
        } else {
            let w1 = 2.0 * h[i] + h[i - 1];
            let w2 = h[i] + 2.0 * h[i - 1];
            d[i] = (w1 + w2) / (w1 / s0 + w2 / s1);
        }
    }
    d[0] = edge_slope(h[0], h[1], delta[0], delta[1]);
    d[n - 1] = edge_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    d
}

/// One-sided three-point slope estimate at a boundary, clamped so the first
/// interval stays monotone.
fn edge_slope(h0: f64, h1: f64, s0: f64, s1: f64) -> f64 {
    let d = ((2.0 * h0 + h1) * s0 - h0 * s1) / (h0 + h1);
    if d * s0 <= 0.0 {
        0.0
    } else if s0 * s1 < 0.0 && d.abs() > 3.0 * s0.abs() {
        3.0 * s0
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_stokes_is_constant_in_v() {
        // Water/Stokes coefficient for the table-tennis ball, alpha = 0.
        let law = DragLaw::power_law(0.000378, 0.0).unwrap();
        assert_eq!(law.phi(3.0).unwrap(), 0.000378);
        assert_eq!(law.phi(0.0).unwrap(), 0.000378); // 0^0 taken as 1
    }

    #[test]
    fn phi_vanishes_at_rest_for_positive_alpha() {
        let law = DragLaw::power_law(5.0, 2.0).unwrap();
        assert_eq!(law.phi(0.0).unwrap(), 0.0);
    }

    #[test]
    fn phi_fractional_exponent() {
        let law = DragLaw::power_law(0.001, 0.5).unwrap();
        // Independent route: exp(alpha * ln v) instead of powf.
        let expected = 0.001 * (0.5 * 4.0_f64.ln()).exp();
        let got = law.phi(4.0).unwrap();
        assert!((got - expected).abs() <= 1e-18, "got {got}");
        assert!((got - 0.002).abs() < 1e-15);
    }

    #[test]
    fn force_opposes_motion() {
        // Quadratic air drag: F = -lambda v^2 for forward motion.
        let air = DragLaw::power_law(0.000348, 1.0).unwrap();
        let f = air.force(10.0).unwrap();
        assert!((f - (-0.0348)).abs() < 1e-12, "got {f}");

        let any = DragLaw::power_law(3.0, 0.7).unwrap();
        assert_eq!(any.force(0.0).unwrap(), 0.0);

        let linear = DragLaw::power_law(2.0, 1.0).unwrap();
        assert_eq!(linear.force(-3.0).unwrap(), 18.0); // pushes back toward +
    }

    #[test]
    fn rejects_invalid_power_laws() {
        assert!(DragLaw::power_law(0.0, 1.0).is_err());
        assert!(DragLaw::power_law(-1.0, 1.0).is_err());
        assert!(DragLaw::power_law(1.0, -0.5).is_err());
        assert!(DragLaw::power_law(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn phi_rejects_negative_speed() {
        let law = DragLaw::power_law(1.0, 1.0).unwrap();
        assert!(matches!(law.phi(-1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn tabulated_matches_nodes_and_stays_positive() {
        // Samples of lambda * sqrt(v); interpolant must stay positive between nodes.
        let samples: Vec<(f64, f64)> = (1..=50)
            .map(|i| {
                let v = 0.01 + (i - 1) as f64 * 0.2;
                (v, 0.001 * v.sqrt())
            })
            .collect();
        let law = DragLaw::tabulated(&samples).unwrap();
        for &(v, phi) in &samples {
            assert!((law.phi(v).unwrap() - phi).abs() <= 1e-18);
        }
        let mut v = samples[0].0;
        while v <= samples.last().unwrap().0 {
            assert!(law.phi(v).unwrap() > 0.0, "phi not positive at v = {v}");
            v += 0.013;
        }
    }

    #[test]
    fn tabulated_refuses_extrapolation() {
        let law = DragLaw::tabulated(&[(1.0, 2.0), (2.0, 3.0)]).unwrap();
        assert!(matches!(law.phi(0.5), Err(Error::Domain(_))));
        assert!(matches!(law.phi(2.5), Err(Error::Domain(_))));
    }

    #[test]
    fn tabulated_rejects_bad_tables() {
        assert!(DragLaw::tabulated(&[(1.0, 2.0)]).is_err());
        assert!(DragLaw::tabulated(&[(1.0, 2.0), (1.0, 3.0)]).is_err());
        assert!(DragLaw::tabulated(&[(2.0, 2.0), (1.0, 3.0)]).is_err());
        assert!(DragLaw::tabulated(&[(1.0, 0.0), (2.0, 3.0)]).is_err());
        assert!(DragLaw::tabulated(&[(1.0, -1.0), (2.0, 3.0)]).is_err());
    }
}
