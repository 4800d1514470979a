//! Temporal channel variation for directional (mmWave) vehicular links.
//!
//! The crate models how a receive beam of width `θ` shapes the temporal
//! correlation of a narrowband channel when the receiver moves, and derives
//! from it:
//!
//! * channel correlation functions for NLOS (exact and decoupled
//!   approximation), LOS and Rician mixtures ([`correlation`]);
//! * channel and beam coherence times, numeric and closed form
//!   ([`coherence`]);
//! * a Kalman-filter-aware lower bound on mutual information and the pilot
//!   spacing that maximizes it ([`link`]);
//! * the spectral-efficiency trade-off between realigning beams every channel
//!   coherence time or every beam coherence time ([`realign`]).
//!
//! A sum-of-sinusoids Monte Carlo simulator ([`mcsim`]) provides an
//! independent check of the analytic correlation.
//!
//! All angles are radians. Degrees only appear at the CLI boundary.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod coherence;
pub mod correlation;
pub mod error;
pub mod link;
pub mod math;
pub mod mcsim;
pub mod realign;
pub mod scenario;

pub use error::{Error, Result};
pub use math::{ComplexValue, Tolerance};
pub use scenario::{Beam, Scenario, ScenarioParams, SpatialLobeModel};

/// Converts a ratio in decibels to linear scale.
pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

/// Converts a linear power ratio to decibels.
pub fn linear_to_db(x: f64) -> f64 {
    10.0 * x.log10()
}
