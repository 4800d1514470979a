//! Temporal correlation `R_h(τ) = E[h(t) h*(t+τ)]` of the channel seen
//! through a von Mises receive beam.
//!
//! The NLOS part follows a one-ring geometry: a fixed beam on a moving
//! receiver drifts by `Δμ(τ)` relative to the scatterers, which both narrows
//! the overlap of the effective angular spectra and shifts the Doppler
//! weighting. The LOS part only loses correlation through pointing error.

use std::f64::consts::PI;

use crate::math::{bessel_i0_ratio, ComplexValue};
use crate::scenario::{pointing_error_los, pointing_error_nlos, Beam, Scenario};

/// A correlation value at a given lag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationSample {
    pub lag_tau: f64,
    pub value: ComplexValue,
}

/// Which NLOS expression [`corr_combined_with`] uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NlosModel {
    #[default]
    Exact,
    Approx,
}

/// Exact NLOS correlation `I0(√(x'²+y'²)) / I0(k_r)` with the beam drift
/// folded into `k_r' = k_r cos(Δμ/2)` and `μ' = μ_r + Δμ/2`.
pub fn corr_nlos_exact(sc: &Scenario, beam: &Beam, tau: f64) -> ComplexValue {
    let dmu = pointing_error_nlos(sc, tau);
    let kr = beam.kr();
    let kp = kr * (0.5 * dmu).cos();
    let mu = sc.pointing() + 0.5 * dmu;
    let w = 2.0 * PI * sc.doppler() * tau;
    // x'^2 + y'^2 expanded so that no cancellation happens between terms
    let arg2 = ComplexValue::new(kp * kp - w * w, -2.0 * w * kp * mu.cos());
    bessel_i0_ratio(arg2.sqrt(), kr)
}

/// Decoupled approximation: a Gaussian pointing-loss factor times the
/// drift-free Bessel ratio.
pub fn corr_nlos_approx(sc: &Scenario, beam: &Beam, tau: f64) -> ComplexValue {
    let kr = beam.kr();
    let fd = sc.doppler();
    let mu = sc.pointing();
    let w = 2.0 * PI * fd * tau;
    let drift = fd * tau * mu.sin() / sc.dr_lambda();
    let loss = (-kr * drift * drift / 8.0).exp();
    let arg2 = ComplexValue::new(kr * kr - w * w, -2.0 * w * kr * mu.cos());
    bessel_i0_ratio(arg2.sqrt(), kr) * loss
}

/// LOS correlation for a beam aligned with the LOS path at `τ = 0`, in its
/// wide-sense-stationary form.
pub fn corr_los(sc: &Scenario, beam: &Beam, tau: f64) -> ComplexValue {
    let dmu = pointing_error_los(sc, tau);
    // cos(Δ) - 1 = -2 sin²(Δ/2)
    let s = (0.5 * dmu).sin();
    let magnitude = (-beam.kr() * s * s).exp();
    let phase = -2.0 * PI * sc.doppler() * tau * sc.los_angle().cos();
    ComplexValue::from_polar(magnitude, phase)
}

/// Rician mixture `K/(K+1)·R_LOS + 1/(K+1)·R_NLOS` using the exact NLOS form.
pub fn corr_combined(sc: &Scenario, beam: &Beam, tau: f64) -> ComplexValue {
    corr_combined_with(sc, beam, tau, NlosModel::Exact)
}

pub fn corr_combined_with(sc: &Scenario, beam: &Beam, tau: f64, model: NlosModel) -> ComplexValue {
    let k = sc.rician_k();
    let nlos = match model {
        NlosModel::Exact => corr_nlos_exact(sc, beam, tau),
        NlosModel::Approx => corr_nlos_approx(sc, beam, tau),
    };
    if k == 0.0 {
        return nlos;
    }
    let w_los = k / (k + 1.0);
    corr_los(sc, beam, tau) * w_los + nlos * (1.0 - w_los)
}

/// Evaluates `corr` on the given lags.
pub fn sample<F: Fn(f64) -> ComplexValue>(corr: F, lags: &[f64]) -> Vec<CorrelationSample> {
    lags.iter()
        .map(|&lag_tau| CorrelationSample {
            lag_tau,
            value: corr(lag_tau),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig3(mu_deg: f64) -> (Scenario, Beam) {
        (
            Scenario::default().with_pointing(mu_deg.to_radians()),
            Beam::from_concentration(50.0).unwrap(),
        )
    }

    #[test]
    fn unity_at_zero_lag() {
        let (sc, beam) = fig3(37.0);
        let sc = sc.with_rician_k(1.3).with_los_angle(0.4);
        assert_eq!(corr_nlos_exact(&sc, &beam, 0.0), ComplexValue::new(1.0, 0.0));
        assert_eq!(corr_nlos_approx(&sc, &beam, 0.0), ComplexValue::new(1.0, 0.0));
        assert_eq!(corr_los(&sc, &beam, 0.0), ComplexValue::new(1.0, 0.0));
        assert!((corr_combined(&sc, &beam, 0.0) - 1.0).norm() < 1e-15);
    }

    #[test]
    fn no_drift_exact_equals_approx() {
        let (sc, beam) = fig3(55.0);
        let sc = sc.with_dr_lambda(f64::INFINITY);
        for i in 0..50 {
            let tau = i as f64 * 2e-5;
            let a = corr_nlos_exact(&sc, &beam, tau);
            let b = corr_nlos_approx(&sc, &beam, tau);
            assert!((a - b).norm() <= 1e-15 * a.norm().max(1e-300), "{tau}");
        }
    }

    #[test]
    fn broadside_no_drift_reduces_to_reciprocal_i0() {
        // μ=90°, 2πf_Dτ = k_r ⇒ x = -jk_r, y = k_r, argument 0
        let (sc, beam) = fig3(90.0);
        let sc = sc.with_dr_lambda(f64::INFINITY);
        let tau = beam.kr() / (2.0 * PI * sc.doppler());
        let r = corr_nlos_exact(&sc, &beam, tau);
        let expected = bessel_i0_ratio(ComplexValue::new(0.0, 0.0), 50.0);
        assert!((r - expected).norm() < 1e-12 * expected.norm());
    }

    #[test]
    fn los_magnitude_example() {
        let beam = Beam::from_concentration(50.0).unwrap();
        let sc = Scenario::default()
            .with_d_lambda(1e4)
            .with_los_angle(80f64.to_radians());
        let tau = 10e-3;
        let dmu = pointing_error_los(&sc, tau);
        assert!((dmu - 5.908_846e-3).abs() < 1e-8);
        let r = corr_los(&sc, &beam, tau);
        assert!((r.norm() - (25.0 * (dmu.cos() - 1.0)).exp()).abs() < 1e-15);
        assert!((r.norm() - 0.999_564).abs() < 1e-6);
    }

    #[test]
    fn rician_limits() {
        let (sc, beam) = fig3(30.0);
        let sc = sc.with_los_angle(30f64.to_radians());
        let tau = 1e-4;
        assert_eq!(
            corr_combined(&sc.with_rician_k(0.0), &beam, tau),
            corr_nlos_exact(&sc, &beam, tau)
        );
        let big = corr_combined(&sc.with_rician_k(1e9), &beam, tau);
        assert!((big - corr_los(&sc, &beam, tau)).norm() < 1e-8);
        let approx = corr_combined_with(&sc.with_rician_k(0.0), &beam, tau, NlosModel::Approx);
        assert_eq!(approx, corr_nlos_approx(&sc, &beam, tau));
    }

    #[test]
    fn exact_bounded_by_one() {
        for &mu in &[0.0, 10.0, 45.0, 80.0, 90.0, 135.0] {
            let (sc, beam) = fig3(mu);
            for i in 0..400 {
                let tau = i as f64 * 5e-6;
                assert!(corr_nlos_exact(&sc, &beam, tau).norm() <= 1.0 + 1e-12);
            }
        }
    }
}
