//! Physical coefficient models and the built-in table-tennis presets.
//!
//! Two reference configurations are provided, both for a table-tennis ball
//! (radius 2 cm, mass 2.7 g):
//!
//! * `table_tennis_water` — Stokes drag in water at 20 °C,
//!   `lambda = 6*pi*eta*r ~ 3.7888e-4 kg/s`, `alpha = 0`;
//! * `table_tennis_air` — quadratic drag in air,
//!   `lambda = 0.87*r^2 = 3.48e-4 kg/m`, `alpha = 1`.

use crate::drag::DragLaw;
use crate::error::{Error, Result};
use crate::model::Scenario;

/// Table-tennis ball radius, m.
pub const TABLE_TENNIS_RADIUS: f64 = 0.02;
/// Table-tennis ball mass, kg.
pub const TABLE_TENNIS_MASS: f64 = 0.0027;
/// Dynamic viscosity of water at 20 °C, Pa·s.
///
/// Handbooks sometimes print this value as "1.005" in non-SI unit
/// conventions; the pascal-second figure below is the one consistent with
/// `6*pi*eta*r = 0.000378 kg/s` for a 2 cm sphere, and SI is used throughout.
pub const WATER_VISCOSITY_20C: f64 = 1.005e-3;

/// A rigid sphere moving through the medium. The model treats the radius as
/// constant: accreted matter is assumed not to change the body's shape.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereBody {
    /// Radius, m, `> 0`.
    pub radius: f64,
    /// Initial mass, kg, `> 0`.
    pub initial_mass: f64,
}

impl SphereBody {
    pub fn new(radius: f64, initial_mass: f64) -> Result<Self> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::Validation(format!(
                "radius must be finite and positive, got {radius}"
            )));
        }
        if !(initial_mass.is_finite() && initial_mass > 0.0) {
            return Err(Error::Validation(format!(
                "initial mass must be finite and positive, got {initial_mass}"
            )));
        }
        Ok(SphereBody {
            radius,
            initial_mass,
        })
    }

    pub fn table_tennis() -> Self {
        SphereBody {
            radius: TABLE_TENNIS_RADIUS,
            initial_mass: TABLE_TENNIS_MASS,
        }
    }
}

/// How the medium sets the drag coefficient for a spherical body.
#[derive(Debug, Clone, PartialEq)]
pub enum MediumModel {
    /// Viscous (Stokes) drag: `lambda = 6*pi*eta*r`, force proportional to v.
    Stokes { viscosity: f64 },
    /// Empirical quadratic air drag: `lambda = 0.87*r^2` with `r` in meters.
    /// The 0.87 constant absorbs the air density and drag coefficient.
    QuadraticAir,
}

/// A resistive medium: a coefficient model plus a human-readable description.
#[derive(Debug, Clone, PartialEq)]
pub struct MediumSpec {
    pub model: MediumModel,
    pub description: String,
}

impl MediumSpec {
    pub fn water_20c() -> Self {
        MediumSpec {
            model: MediumModel::Stokes {
                viscosity: WATER_VISCOSITY_20C,
            },
            description: "water at 20 \u{b0}C (Stokes drag)".into(),
        }
    }

    pub fn air() -> Self {
        MediumSpec {
            model: MediumModel::QuadraticAir,
            description: "air (drag force proportional to v\u{b2})".into(),
        }
    }

    /// The power-law drag this medium exerts on `body`.
    pub fn drag_law(&self, body: &SphereBody) -> Result<DragLaw> {
        match &self.model {
            MediumModel::Stokes { viscosity } => {
                DragLaw::power_law(stokes_lambda(*viscosity, body.radius)?, 0.0)
            }
            MediumModel::QuadraticAir => DragLaw::power_law(quadratic_lambda(body.radius)?, 1.0),
        }
    }
}

/// Stokes friction coefficient `lambda = 6*pi*eta*r`, kg/s.
pub fn stokes_lambda(eta: f64, r: f64) -> Result<f64> {
    if !(eta.is_finite() && eta > 0.0) {
        return Err(Error::Validation(format!(
            "viscosity must be finite and positive, got {eta}"
        )));
    }
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::Validation(format!(
            "radius must be finite and positive, got {r}"
        )));
    }
    Ok(6.0 * std::f64::consts::PI * eta * r)
}

/// Empirical quadratic-drag coefficient `lambda = 0.87*r^2`, kg/m, for a
/// sphere of radius `r` meters in air.
pub fn quadratic_lambda(r: f64) -> Result<f64> {
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::Validation(format!(
            "radius must be finite and positive, got {r}"
        )));
    }
    Ok(0.87 * r * r)
}

/// Built-in scenario presets. The names are part of the CLI contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    TableTennisWater,
    TableTennisAir,
}

impl std::fmt::Display for Preset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Preset::TableTennisWater => "table_tennis_water",
            Preset::TableTennisAir => "table_tennis_air",
        })
    }
}

impl std::str::FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table_tennis_water" => Ok(Preset::TableTennisWater),
            "table_tennis_air" => Ok(Preset::TableTennisAir),
            other => Err(Error::Validation(format!(
                "unknown preset '{other}' (expected table_tennis_water or table_tennis_air)"
            ))),
        }
    }
}

/// Builds the scenario for a preset at initial velocity `v0 >= 0`.
pub fn preset(name: Preset, v0: f64) -> Result<Scenario> {
    let body = SphereBody::table_tennis();
    let medium = match name {
        Preset::TableTennisWater => MediumSpec::water_20c(),
        Preset::TableTennisAir => MediumSpec::air(),
    };
    Scenario::new(
        body.initial_mass,
        v0,
        medium.drag_law(&body)?,
        name.to_string(),
    )
}
