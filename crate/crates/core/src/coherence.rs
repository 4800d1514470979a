//! Channel coherence time `T_c` (first lag where `|R_h(τ)| = R`) and beam
//! coherence time `T_B` (first lag where pointing loss drops the received
//! power to `ζ` of its aligned peak).
//!
//! Closed forms report domain violations as errors; only the lobe-conditioned
//! NLOS beam coherence time clamps, because it is averaged over a Gaussian
//! whose tail always leaves the arccos domain.

use std::f64::consts::PI;

use crate::math::{
    find_first_crossing, truncated_gaussian_expectation, ComplexValue, Tolerance,
    DEFAULT_SCAN_STEPS,
};
use crate::scenario::{Beam, Scenario, SpatialLobeModel};
use crate::{Error, Result};

/// Thresholds and search range for the coherence-time computations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherenceSpec {
    pub threshold_r: f64,
    pub threshold_zeta: f64,
    pub tau_max: f64,
    pub scan_steps: usize,
    pub tol: Tolerance,
}

impl CoherenceSpec {
    pub fn new(threshold_r: f64, threshold_zeta: f64, tau_max: f64) -> Result<Self> {
        for (name, v) in [("threshold_R", threshold_r), ("threshold_zeta", threshold_zeta)] {
            if !(v > 0.0 && v <= 1.0) {
                return Err(Error::param(name, v, "threshold must lie in (0, 1]"));
            }
        }
        if !(tau_max > 0.0) {
            return Err(Error::param("tau_max", tau_max, "must be > 0"));
        }
        Ok(CoherenceSpec {
            threshold_r,
            threshold_zeta,
            tau_max,
            scan_steps: DEFAULT_SCAN_STEPS,
            tol: Tolerance::new(0.0, 1e-12, 200).expect("valid"),
        })
    }

    /// `tau_max = 100/f_D`.
    pub fn for_scenario(sc: &Scenario, threshold_r: f64, threshold_zeta: f64) -> Result<Self> {
        CoherenceSpec::new(threshold_r, threshold_zeta, 100.0 / sc.doppler())
    }

    pub fn with_scan_steps(mut self, steps: usize) -> Self {
        self.scan_steps = steps.max(1);
        self
    }

    pub fn with_tau_max(mut self, tau_max: f64) -> Self {
        self.tau_max = tau_max;
        self
    }
}

/// First lag at which `|corr(τ)|` reaches the threshold `R`.
pub fn tc_numeric<F: Fn(f64) -> ComplexValue>(corr: F, spec: &CoherenceSpec) -> Result<f64> {
    if spec.threshold_r >= 1.0 {
        return Ok(0.0);
    }
    find_first_crossing(
        |t| corr(t).norm(),
        spec.threshold_r,
        spec.tau_max,
        spec.scan_steps,
        spec.tol,
    )
}

fn check_r(r: f64) -> Result<()> {
    if r > 0.0 && r <= 1.0 {
        Ok(())
    } else {
        Err(Error::param("R", r, "threshold must lie in (0, 1]"))
    }
}

/// Small-pointing-angle closed form, written in terms of the beamwidth.
pub fn tc_small_mu(sc: &Scenario, beam: &Beam, r: f64) -> Result<f64> {
    check_r(r)?;
    let fd = sc.doppler();
    let th2 = beam.theta().powi(2);
    let r4 = r.powi(4);
    let drift = fd * sc.pointing().sin() / sc.dr_lambda();
    let den = (2.0 * PI * fd).powi(2) * th2 * th2 + drift * drift / (2.0 * th2 * r4);
    if !(den > 0.0) {
        return Err(Error::Domain {
            what: "small-angle coherence denominator",
            value: den,
        });
    }
    Ok(((1.0 / r4 - 1.0) / den).sqrt())
}

/// Perfect pointing: `√(1/R⁴ − 1) / (2π f_D θ²)`.
pub fn tc_no_pointing(sc: &Scenario, beam: &Beam, r: f64) -> Result<f64> {
    check_r(r)?;
    Ok((1.0 / r.powi(4) - 1.0).sqrt() / (2.0 * PI * sc.doppler() * beam.theta().powi(2)))
}

/// Quadratic-solve closed form for general pointing angle.
///
/// With `L = k_r + ln R`:
/// `T_c² = (k_r² − L²) / ([4L − 2k_r²/L]·k_r f_D² sin²μ_r/(8D²) + (2πf_D)² − (2πf_D k_r cos μ_r / L)²)`.
/// Fails with [`Error::InvalidRegime`] when the denominator is not positive.
pub fn tc_general_mu(sc: &Scenario, beam: &Beam, r: f64) -> Result<f64> {
    check_r(r)?;
    let kr = beam.kr();
    let fd = sc.doppler();
    let mu = sc.pointing();
    let l = kr + r.ln();
    if !(l > 0.0) {
        return Err(Error::InvalidRegime { denominator: l });
    }
    let drift = kr * (fd * mu.sin() / sc.dr_lambda()).powi(2) / 8.0;
    let w = 2.0 * PI * fd;
    let den = (4.0 * l - 2.0 * kr * kr / l) * drift + w * w - (w * kr * mu.cos() / l).powi(2);
    if !(den > 0.0) {
        return Err(Error::InvalidRegime { denominator: den });
    }
    Ok(((kr * kr - l * l) / den).sqrt())
}

/// Worst-case (broadside) closed form; reduces to
/// `(1/2πf_D)·√(ln(1/R²)/θ² − ln²R)` without pointing error.
pub fn tc_worst_case(sc: &Scenario, beam: &Beam, r: f64) -> Result<f64> {
    check_r(r)?;
    let th2 = beam.theta().powi(2);
    let fd = sc.doppler();
    let a = 1.0 + th2 * r.ln();
    if !(a > 0.0) {
        return Err(Error::Domain {
            what: "1 + θ² ln R",
            value: a,
        });
    }
    let drift = fd * sc.pointing().sin() / sc.dr_lambda();
    let den = 0.25 * a * drift * drift + (2.0 * PI * fd).powi(2) * th2 * th2;
    Ok(((1.0 - a * a) / den).sqrt())
}

fn arccos_checked(what: &'static str, x: f64) -> Result<f64> {
    if (-1.0..=1.0).contains(&x) {
        Ok(x.acos())
    } else {
        Err(Error::Domain { what, value: x })
    }
}

/// LOS coherence time `D_λ/(f_D sin α_LOS)·acos(2θ² ln R + 1)`.
pub fn tc_los(sc: &Scenario, beam: &Beam, r: f64) -> Result<f64> {
    check_r(r)?;
    let angle = arccos_checked("2θ² ln R + 1", 2.0 * beam.theta().powi(2) * r.ln() + 1.0)?;
    Ok(sc.d_lambda() / (sc.doppler() * sc.los_angle().sin()) * angle)
}

/// LOS beam coherence time `D_λ/(f_D sin μ_r)·acos(θ² ln ζ + 1)`.
pub fn tb_los(sc: &Scenario, beam: &Beam, zeta: f64) -> Result<f64> {
    if !(zeta > 0.0 && zeta <= 1.0) {
        return Err(Error::param("zeta", zeta, "threshold must lie in (0, 1]"));
    }
    let angle = arccos_checked("θ² ln ζ + 1", beam.theta().powi(2) * zeta.ln() + 1.0)?;
    Ok(sc.d_lambda() / (sc.doppler() * sc.pointing().sin()) * angle)
}

/// NLOS beam coherence time for a lobe of width `β`. The arccos argument is
/// clamped into `[-1, 1]`, so very wide lobes saturate at `π·D_{r,λ}/(f_D sin μ_r)`.
pub fn tb_nlos_given_beta(sc: &Scenario, beam: &Beam, beta: f64, zeta: f64) -> f64 {
    let x = (beta * beta + beam.theta().powi(2)) * zeta.ln() + 1.0;
    sc.dr_lambda() / (sc.doppler() * sc.pointing().sin()) * x.clamp(-1.0, 1.0).acos()
}

/// NLOS beam coherence time averaged over the truncated lobe-width
/// distribution.
pub fn tb_nlos_mean(
    sc: &Scenario,
    beam: &Beam,
    lobes: &SpatialLobeModel,
    zeta: f64,
    tol: Tolerance,
) -> Result<f64> {
    if !(zeta > 0.0 && zeta <= 1.0) {
        return Err(Error::param("zeta", zeta, "threshold must lie in (0, 1]"));
    }
    if sc.pointing().sin() == 0.0 || sc.dr_lambda().is_infinite() {
        // no drift: the beam never leaves the lobe
        return Ok(f64::INFINITY);
    }
    truncated_gaussian_expectation(
        |b| tb_nlos_given_beta(sc, beam, b, zeta),
        lobes.mean,
        lobes.std,
        lobes.min_width,
        tol,
    )
}
