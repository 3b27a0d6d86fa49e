//! Shared fixtures for the solver benchmarks.

use accrete_core::scenarios::{preset, Preset};
use accrete_core::{DragLaw, Scenario};

pub fn water() -> Scenario {
    preset(Preset::TableTennisWater, 1.0).unwrap()
}

pub fn air() -> Scenario {
    preset(Preset::TableTennisAir, 10.0).unwrap()
}

/// Mid-exponent scenario: exercises the general power-law branches.
pub fn half_power() -> Scenario {
    Scenario::new(
        1.0,
        4.0,
        DragLaw::power_law(1e-3, 0.5).unwrap(),
        "half_power",
    )
    .unwrap()
}
