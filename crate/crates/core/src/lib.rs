//! Variable-mass dynamics of a body sweeping up a resting medium.
//!
//! A body of initial mass `m0` and velocity `v0` moves through a medium whose
//! particles are at rest; every particle it meets sticks. The accreted matter
//! carries no momentum, so `m*v = m0*v0` holds along the whole motion, and
//! the apparent drag is entirely the momentum cost of the growing mass. The
//! mass obeys
//!
//! ```text
//! dm/dt = phi(m0*v0 / m) * m / m0
//! ```
//!
//! where `phi(v)` is the drag coefficient from `F = -phi(v) * v`.
//!
//! The crate computes trajectories `(t, x, m, v)` by three independent
//! routes, built to be cross-checked against each other:
//!
//! * [`closed`] — explicit formulas for power-law drag `phi = lambda*v^alpha`,
//!   plus scalar metrics (doubling time/distance, maximum range);
//! * [`implicit`] — quadrature of the implicit integral solutions and their
//!   monotone inversion, valid for arbitrary positive drag laws;
//! * [`implicit::integrate_trajectory`] with the `ode` method — direct
//!   adaptive Runge–Kutta integration of the mass equations.
//!
//! [`scenarios`] provides the two built-in table-tennis presets (Stokes drag
//! in water, quadratic drag in air) and [`calibrate`] solves the inverse
//! problem of recovering `(lambda, alpha)` from observed masses.
//!
//! ```
//! use accrete_core::scenarios::{preset, Preset};
//!
//! let ball = preset(Preset::TableTennisWater, 1.0).unwrap();
//! let doubling = accrete_core::closed::doubling_time(&ball).unwrap();
//! assert!((doubling - 4.94).abs() < 0.01);
//! ```
//!
//! Everything here is a pure function of its inputs and all types are
//! immutable after construction; any number of threads may call into the
//! crate concurrently without synchronization.

pub mod calibrate;
pub mod closed;
pub mod drag;
mod error;
pub mod implicit;
pub mod model;
pub mod numerics;
pub mod scenarios;

pub use drag::{DragLaw, TabulatedPhi};
pub use error::{Error, Result};
pub use model::{BodyState, Horizon, Method, Scenario, SolutionSeries};
pub use numerics::SolverConfig;
