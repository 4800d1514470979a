//! Estimation-aware mutual-information lower bound for a Gauss–Markov
//! channel tracked by a pilot-aided Kalman filter.
//!
//! Pilots are inserted every `ν` symbols of duration `T`. Between pilots the
//! channel follows `h[i] = α h[i-1] + ξ[i-1]` with `α = R_h(νT)` and
//! `σ_ξ² = 1 − |R_h(νT)|²`.

use crate::math::{bessel_i0e, ComplexValue};
use crate::scenario::Beam;
use crate::{Error, Result};

/// Inputs of the Kalman / mutual-information chain. The channel variance is
/// fixed at 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkConfig {
    pub snr_data: f64,
    pub snr_pilot: f64,
    pub pilot_spacing_nu: usize,
    pub symbol_t: f64,
}

impl LinkConfig {
    pub const CHANNEL_VARIANCE: f64 = 1.0;

    pub fn new(snr_data: f64, snr_pilot: f64, pilot_spacing_nu: usize, symbol_t: f64) -> Result<Self> {
        if !(snr_data >= 0.0) || !snr_data.is_finite() {
            return Err(Error::param("snr_data", snr_data, "must be finite and >= 0"));
        }
        if !(snr_pilot >= 0.0) || !snr_pilot.is_finite() {
            return Err(Error::param("snr_pilot", snr_pilot, "must be finite and >= 0"));
        }
        if pilot_spacing_nu < 2 {
            return Err(Error::param(
                "pilot_spacing_nu",
                pilot_spacing_nu as f64,
                "must be >= 2",
            ));
        }
        if !(symbol_t > 0.0) || !symbol_t.is_finite() {
            return Err(Error::param("symbol_T", symbol_t, "must be finite and > 0"));
        }
        Ok(LinkConfig {
            snr_data,
            snr_pilot,
            pilot_spacing_nu,
            symbol_t,
        })
    }

    /// Symbol duration from a coherence bandwidth, `T = 1/B_c`.
    pub fn from_bandwidth(snr_data: f64, snr_pilot: f64, nu: usize, bandwidth_hz: f64) -> Result<Self> {
        LinkConfig::new(snr_data, snr_pilot, nu, 1.0 / bandwidth_hz)
    }

    pub fn with_nu(self, nu: usize) -> Result<Self> {
        LinkConfig::new(self.snr_data, self.snr_pilot, nu, self.symbol_t)
    }
}

/// Error variance at the pilots and the variance of the known part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EstimationState {
    pub psi: f64,
    pub known_part_variance: f64,
}

impl EstimationState {
    pub fn new(psi: f64) -> Self {
        EstimationState {
            psi,
            known_part_variance: LinkConfig::CHANNEL_VARIANCE - psi,
        }
    }
}

/// `e^k / I0(k)`, the peak of a von Mises pattern of concentration `k`
/// relative to an isotropic one. Equals 1 at `k = 0`.
pub fn gain_from_concentration(k: f64) -> f64 {
    1.0 / bessel_i0e(k)
}

/// Antenna gain over an omnidirectional antenna, `e^{k_r}/I0(k_r)`.
pub fn antenna_gain(beam: &Beam) -> f64 {
    gain_from_concentration(beam.kr())
}

/// The first `len` error variances of the pilot-rate Kalman recursion.
pub fn kalman_error_sequence(
    alpha_coef: ComplexValue,
    sigma_xi2: f64,
    pilot_snr_eff: f64,
    len: usize,
) -> Vec<f64> {
    let a2 = alpha_coef.norm_sqr();
    let mut out = Vec::with_capacity(len);
    if len == 0 {
        return out;
    }
    let mut psi = 1.0 / (1.0 / (LinkConfig::CHANNEL_VARIANCE + sigma_xi2) + pilot_snr_eff);
    out.push(psi);
    for _ in 1..len {
        psi = 1.0 / (1.0 / (a2 * psi + sigma_xi2) + pilot_snr_eff);
        out.push(psi);
    }
    out
}

/// Steady-state Kalman error variance for `α = R_h(νT)`,
/// `σ_ξ² = 1 − |α|²` and effective pilot SNR `ρ = SNR_v G_a`.
///
/// Nonnegative root of `ρ|α|²ψ² + (1 + ρσ_ξ² − |α|²)ψ − σ_ξ² = 0`, evaluated
/// in rationalized form so that it stays accurate when `ρ|α|²` is tiny.
pub fn psi_steady(corr_at_nu_t: ComplexValue, pilot_snr_eff: f64) -> f64 {
    let r2 = corr_at_nu_t.norm_sqr().min(1.0);
    let s = 1.0 - r2;
    let rho = pilot_snr_eff;
    if s == 0.0 {
        // a perfectly static channel is learned exactly unless there are no pilots
        return if rho > 0.0 { 0.0 } else { LinkConfig::CHANNEL_VARIANCE };
    }
    let b = 1.0 + rho * s - r2;
    2.0 * s / (b + (b * b + 4.0 * rho * r2 * s).sqrt())
}

/// Total error variance `offset` symbols after a pilot.
pub fn estimation_error_at<F: Fn(f64) -> ComplexValue>(psi: f64, offset_i: usize, corr: F, t: f64) -> f64 {
    psi + (1.0 - corr(offset_i as f64 * t).norm_sqr())
}

/// `|R_h(iT)|²` for `i = 1..=ν`.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationProfile {
    mag2: Vec<f64>,
}

impl CorrelationProfile {
    pub fn new<F: Fn(f64) -> ComplexValue>(corr: F, nu: usize, t: f64) -> Self {
        CorrelationProfile {
            mag2: (1..=nu).map(|i| corr(i as f64 * t).norm_sqr()).collect(),
        }
    }

    pub fn nu(&self) -> usize {
        self.mag2.len()
    }

    /// `|R_h(iT)|²`, with `i` starting at 1.
    pub fn at(&self, i: usize) -> f64 {
        self.mag2[i - 1]
    }

    /// `|R_h(νT)|²`.
    pub fn at_nu(&self) -> f64 {
        self.mag2[self.mag2.len() - 1]
    }

    /// Steady-state error for the given effective pilot SNR.
    pub fn psi(&self, pilot_snr_eff: f64) -> f64 {
        psi_steady(ComplexValue::new(self.at_nu().sqrt(), 0.0), pilot_snr_eff)
    }

    /// `(1/ν) Σ_{i=2}^{ν} ln(1 + (|R_i|² − ψ)γ / ((ψ + 1 − |R_i|²)γ + 1))`
    /// with `γ = SNR_s G_a`. Summands are not clamped.
    pub fn bound(&self, psi: f64, data_snr_eff: f64) -> f64 {
        let sum: f64 = self.mag2[1..]
            .iter()
            .map(|&r2| {
                let num = (r2 - psi) * data_snr_eff;
                let den = (psi + 1.0 - r2) * data_snr_eff + 1.0;
                (num / den).ln_1p()
            })
            .sum();
        sum / self.nu() as f64
    }

    /// Interference-limited form obtained as `SNR_s G_a → ∞`.
    pub fn bound_high_snr(&self, psi: f64) -> f64 {
        let sum: f64 = self.mag2[1..]
            .iter()
            .map(|&r2| ((r2 - psi) / (psi + 1.0 - r2)).ln_1p())
            .sum();
        sum / self.nu() as f64
    }
}

/// `I_low(θ, SNR_s, ν)` in nats per symbol.
pub fn mi_lower_bound<F: Fn(f64) -> ComplexValue>(beam: &Beam, link: &LinkConfig, corr: F) -> f64 {
    let ga = antenna_gain(beam);
    let profile = CorrelationProfile::new(corr, link.pilot_spacing_nu, link.symbol_t);
    let psi = profile.psi(link.snr_pilot * ga);
    profile.bound(psi, link.snr_data * ga)
}

/// High-SNR approximation of [`mi_lower_bound`], keeping the same `ψ`.
pub fn mi_lower_bound_high_snr<F: Fn(f64) -> ComplexValue>(beam: &Beam, link: &LinkConfig, corr: F) -> f64 {
    let ga = antenna_gain(beam);
    let profile = CorrelationProfile::new(corr, link.pilot_spacing_nu, link.symbol_t);
    profile.bound_high_snr(profile.psi(link.snr_pilot * ga))
}

/// Powers of two from 2 to 1024.
pub fn default_nu_grid() -> Vec<usize> {
    (1..=10).map(|p| 1usize << p).collect()
}

/// Pilot spacing on `nu_grid` maximizing the bound; ties go to the larger `ν`.
pub fn optimal_pilot_spacing<F: Fn(f64) -> ComplexValue>(
    beam: &Beam,
    template: &LinkConfig,
    corr: F,
    nu_grid: &[usize],
) -> Result<usize> {
    let mut best: Option<(usize, f64)> = None;
    for &nu in nu_grid {
        let link = template.with_nu(nu)?;
        let v = mi_lower_bound(beam, &link, &corr);
        match best {
            Some((_, b)) if v < b => {}
            _ => best = Some((nu, v)),
        }
    }
    best.map(|(nu, _)| nu)
        .ok_or(Error::param("nu_grid", 0.0, "grid must be nonempty"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one(_: f64) -> ComplexValue {
        ComplexValue::new(1.0, 0.0)
    }

    #[test]
    fn gain_limits_and_example() {
        assert_eq!(gain_from_concentration(0.0), 1.0);
        let g = antenna_gain(&Beam::from_degrees(10.0).unwrap());
        assert!((g - 14.31).abs() < 0.01, "{g}");
        assert!((10.0 * g.log10() - 11.56).abs() < 0.01);
    }

    #[test]
    fn kalman_perfect_averaging() {
        let rho = 0.7;
        let seq = kalman_error_sequence(ComplexValue::new(1.0, 0.0), 0.0, rho, 20);
        for (l, psi) in seq.iter().enumerate() {
            let expected = 1.0 + (l + 1) as f64 * rho;
            assert!((1.0 / psi - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn steady_state_is_fixed_point() {
        for &(a, rho) in &[(0.3, 0.1), (0.95, 10.0), (0.999, 1000.0), (0.0, 2.0)] {
            let alpha = ComplexValue::from_polar(a, 0.4);
            let s = 1.0 - a * a;
            let psi = psi_steady(alpha, rho);
            let mapped = 1.0 / (1.0 / (a * a * psi + s) + rho);
            assert!((mapped - psi).abs() < 1e-12);
            let seq = kalman_error_sequence(alpha, s, rho, 5000);
            assert!((seq[4999] - psi).abs() < 1e-10);
        }
    }

    #[test]
    fn steady_state_edges() {
        assert_eq!(psi_steady(ComplexValue::new(1.0, 0.0), 3.0), 0.0);
        assert!(psi_steady(ComplexValue::new(0.9, 0.0), 1e12) < 1e-11);
    }

    #[test]
    fn bound_static_channel() {
        let beam = Beam::from_degrees(10.0).unwrap();
        let link = LinkConfig::new(2.0, 1.0, 16, 1e-7).unwrap();
        let ga = antenna_gain(&beam);
        let profile = CorrelationProfile::new(one, 16, 1e-7);
        let v = profile.bound(0.0, 2.0 * ga);
        assert!((v - 15.0 / 16.0 * (2.0 * ga).ln_1p()).abs() < 1e-12);
        // the static channel is learned exactly, so ψ = 0 as well
        assert!((mi_lower_bound(&beam, &link, one) - v).abs() < 1e-12);
    }

    #[test]
    fn estimation_error_offsets() {
        let corr = |t: f64| ComplexValue::new((-t * 1e5).exp(), 0.0);
        assert_eq!(estimation_error_at(0.2, 0, corr, 1e-7), 0.2);
        assert_eq!(estimation_error_at(0.2, 7, one, 1e-7), 0.2);
        let v = estimation_error_at(0.2, 10, corr, 1e-7);
        assert!((v - (0.2 + 1.0 - (-0.2f64).exp())).abs() < 1e-14);
    }

    #[test]
    fn tie_break_prefers_larger_spacing() {
        let beam = Beam::from_degrees(10.0).unwrap();
        // no data power: the bound is 0 for every ν
        let link = LinkConfig::new(0.0, 1.0, 2, 1e-7).unwrap();
        let corr = |t: f64| ComplexValue::new((-t * 1e4).exp(), 0.0);
        let grid = default_nu_grid();
        assert_eq!(grid.first(), Some(&2));
        assert_eq!(grid.last(), Some(&1024));
        assert_eq!(optimal_pilot_spacing(&beam, &link, corr, &grid).unwrap(), 1024);
        assert!(optimal_pilot_spacing(&beam, &link, one, &[]).is_err());
    }

    #[test]
    fn config_validation() {
        assert!(LinkConfig::new(1.0, 1.0, 1, 1e-7).is_err());
        assert!(LinkConfig::new(-1.0, 1.0, 4, 1e-7).is_err());
        assert!(LinkConfig::new(1.0, 1.0, 4, 0.0).is_err());
        let l = LinkConfig::from_bandwidth(1.0, 1.0, 64, 10e6).unwrap();
        assert!((l.symbol_t - 1e-7).abs() < 1e-20);
    }
}
