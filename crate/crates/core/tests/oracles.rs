use std::f64::consts::PI;

use beamcoh::coherence::*;
use beamcoh::correlation::*;
use beamcoh::link::*;
use beamcoh::math::{bessel_i0e, integrate, integrate_periodic, ComplexValue, Tolerance};
use beamcoh::realign::*;
use beamcoh::{Beam, Scenario, SpatialLobeModel};

fn deg(x: f64) -> f64 {
    x.to_radians()
}

/// Direct quadrature of the beam-weighted Doppler integral, without the
/// closed-form Bessel reduction.
fn corr_by_quadrature(sc: &Scenario, kr: f64, tau: f64) -> ComplexValue {
    let mu = sc.pointing();
    let dmu = sc.doppler() * tau * mu.sin() / sc.dr_lambda();
    let w = 2.0 * PI * sc.doppler() * tau;
    let tol = Tolerance::new(1e-15, 1e-14, 40).unwrap();
    let integral = integrate_periodic(
        |a: f64| {
            let gain = (0.5 * kr * ((a - mu).cos() + (a - mu - dmu).cos()) - kr).exp();
            ComplexValue::from_polar(gain, -w * a.cos())
        },
        tol,
    )
    .unwrap();
    integral / (2.0 * PI * bessel_i0e(kr))
}

#[test]
fn exact_correlation_matches_direct_quadrature() {
    for &(kr, mu, dr) in &[
        (50.0, 10.0, 100.0),
        (50.0, 80.0, 100.0),
        (400.0, 45.0, 1000.0),
        (1.62, 90.0, 100.0),
        (3.0, 170.0, 20.0),
    ] {
        let sc = Scenario::default().with_pointing(deg(mu)).with_dr_lambda(dr);
        let beam = Beam::from_concentration(kr).unwrap();
        for i in 0..=50 {
            let tau = i as f64 * 0.01 / sc.doppler();
            let a = corr_nlos_exact(&sc, &beam, tau);
            let b = corr_by_quadrature(&sc, kr, tau);
            assert!((a - b).norm() <= 1e-8, "kr={kr} mu={mu} i={i}: {a} vs {b}");
        }
    }
}

#[test]
fn exact_correlation_reference_point() {
    // independent reference from scipy: k=50, μ=80°, D_r,λ=100, f_Dτ=0.3
    let sc = Scenario::default().with_pointing(deg(80.0)).with_dr_lambda(100.0);
    let beam = Beam::from_concentration(50.0).unwrap();
    let r = corr_nlos_exact(&sc, &beam, 0.3 / sc.doppler());
    let expected = ComplexValue::new(0.916_848_064_689_809_6, -0.305_395_225_308_936_15);
    assert!((r - expected).norm() < 1e-10, "{r}");
}

#[test]
fn approximation_tracks_exact_at_figure_parameters() {
    for mu in [10.0, 80.0] {
        let sc = Scenario::default().with_pointing(deg(mu)).with_dr_lambda(100.0);
        let beam = Beam::from_concentration(50.0).unwrap();
        for i in 0..=500 {
            let tau = i as f64 * 1e-3 / sc.doppler();
            let d = (corr_nlos_approx(&sc, &beam, tau) - corr_nlos_exact(&sc, &beam, tau)).norm();
            assert!(d <= 0.02, "mu={mu} f_D tau={}: {d}", i as f64 * 1e-3);
        }
    }
}

#[test]
fn closed_form_reference_values() {
    let b = Beam::from_degrees(10.0).unwrap();
    let sc = Scenario::default();
    assert!((tc_no_pointing(&sc, &b, 0.5).unwrap() - 3.372_560_705_234_251e-3).abs() < 1e-15);
    let far = sc.with_pointing(deg(90.0)).with_dr_lambda(f64::INFINITY);
    assert!((tc_worst_case(&far, &b, 0.5).unwrap() - 1.779_977_778_559_332_8e-4).abs() < 1e-15);
    let los = sc.with_d_lambda(1e4).with_los_angle(deg(80.0));
    assert!((tc_los(&los, &b, 0.5).unwrap() - 0.493_580_135_182_342_34).abs() < 1e-12);
    let g = antenna_gain(&b);
    assert!((g - 14.306_482_539_614_944).abs() < 1e-10);
}

#[test]
fn numeric_coherence_agrees_with_no_pointing_form_for_narrow_beams() {
    let sc = Scenario::default().with_pointing(0.0).with_dr_lambda(f64::INFINITY);
    let b = Beam::from_degrees(3.0).unwrap();
    let spec = CoherenceSpec::new(0.5, 0.5, 1e4 / sc.doppler())
        .unwrap()
        .with_scan_steps(1 << 17);
    let t = tc_numeric(|x| corr_nlos_exact(&sc, &b, x), &spec).unwrap();
    let closed = tc_no_pointing(&sc, &b, 0.5).unwrap();
    assert!((t / closed - 1.0).abs() < 0.02, "{t} vs {closed}");
}

#[test]
fn antenna_gain_is_peak_density_over_isotropic() {
    for th in [1.0, 5.0, 10.0, 30.0, 60.0] {
        let b = Beam::from_degrees(th).unwrap();
        let kr = b.kr();
        // density at the mode: e^{k}/(2π I0(k)), written with the scaled Bessel function
        let peak = 1.0 / (2.0 * PI * bessel_i0e(kr));
        assert!((antenna_gain(&b) - peak * 2.0 * PI).abs() < 1e-12 * antenna_gain(&b));
    }
}

#[test]
fn selection_probabilities_match_double_integral() {
    let tol = Tolerance::new(1e-13, 1e-12, 40).unwrap();
    for delta in [1.0, 2.0, 3.7, 10.0] {
        let p1 = integrate(
            |g2: f64| {
                let inner = integrate(|g1: f64| (-g1).exp(), g2 / delta, g2 / delta + 60.0, tol).unwrap();
                inner * (-g2).exp()
            },
            0.0,
            60.0,
            tol,
        )
        .unwrap();
        let p2 = integrate(
            |g2: f64| {
                let inner = integrate(|g1: f64| (-g1).exp(), 0.0, g2 / delta, tol).unwrap();
                inner * (-g2).exp()
            },
            0.0,
            60.0,
            tol,
        )
        .unwrap();
        let (c1, c2) = selection_probs(delta).unwrap();
        assert!((p1 - c1).abs() < 1e-8, "delta={delta}: {p1} vs {c1}");
        assert!((p2 - c2).abs() < 1e-8);
        assert!((c1 + c2 - 1.0).abs() < 1e-15);
    }
}

#[test]
fn short_density_cdf_is_product_of_marginals() {
    let tol = Tolerance::new(1e-14, 1e-13, 40).unwrap();
    for &(g1, g2) in &[(1.0f64, 0.5f64), (2.0, 0.2), (1.0, 1.0), (3.0, 0.03)] {
        for &g in &[0.0, 0.01, 0.3, 1.0, 4.0, 20.0] {
            let product = (1.0 - (-g / g1).exp()) * (1.0 - (-g / g2).exp());
            assert!((snr_cdf_short(g, g1, g2) - product).abs() < 1e-10);
            let integral = integrate(|x| snr_pdf_short(x, g1, g2), 0.0, g, tol).unwrap();
            assert!((integral - product).abs() < 1e-10, "{g1} {g2} {g}");
            assert!(snr_pdf_short(g, g1, g2) >= 0.0);
        }
        let total = integrate(|x| snr_pdf_short(x, g1, g2), 0.0, 60.0 * g1, tol).unwrap();
        assert!((total - 1.0).abs() < 1e-10);
    }
}

#[test]
fn long_density_moments() {
    let tol = Tolerance::new(1e-14, 1e-13, 40).unwrap();
    for gbar in [0.1, 1.0, 7.0] {
        let total = integrate(|x| snr_pdf_long(x, gbar), 0.0, 60.0 * gbar, tol).unwrap();
        let mean = integrate(|x| x * snr_pdf_long(x, gbar), 0.0, 60.0 * gbar, tol).unwrap();
        assert!((total - 1.0).abs() < 1e-10);
        assert!((mean - gbar).abs() < 1e-9 * gbar);
    }
}

#[test]
fn high_snr_form_matches_at_forty_db() {
    let sc = Scenario::default().with_pointing(0.0).with_dr_lambda(100.0);
    let b = Beam::from_degrees(10.0).unwrap();
    let link = LinkConfig::from_bandwidth(1e4, 1.0, 64, 10e6).unwrap();
    let corr = |t: f64| corr_nlos_exact(&sc, &b, t);
    let full = mi_lower_bound(&b, &link, corr);
    let high = mi_lower_bound_high_snr(&b, &link, corr);
    assert!((full / high - 1.0).abs() < 0.01, "{full} vs {high}");
}

#[test]
fn bound_has_interior_maximum_in_pilot_spacing() {
    let sc = Scenario::default().with_pointing(0.0).with_dr_lambda(100.0);
    let b = Beam::from_degrees(10.0).unwrap();
    let link = LinkConfig::from_bandwidth(1.0, 1.0, 2, 10e6).unwrap();
    let corr = |t: f64| corr_nlos_exact(&sc, &b, t);
    let grid = default_nu_grid();
    let values: Vec<f64> = grid
        .iter()
        .map(|&nu| mi_lower_bound(&b, &link.with_nu(nu).unwrap(), corr))
        .collect();
    let best = optimal_pilot_spacing(&b, &link, corr, &grid).unwrap();
    assert!(best != grid[0] && best != grid[grid.len() - 1]);
    let i = grid.iter().position(|&n| n == best).unwrap();
    assert!(values[i] > values[0] && values[i] > values[values.len() - 1]);
}

#[test]
fn estimation_error_mid_frame() {
    let sc = Scenario::default().with_pointing(0.0).with_dr_lambda(100.0);
    let b = Beam::from_degrees(10.0).unwrap();
    let t = 1e-7;
    let corr = |x: f64| corr_nlos_exact(&sc, &b, x);
    let v = estimation_error_at(0.05, 32, corr, t);
    let direct = 0.05 + 1.0 - corr(32.0 * t).norm_sqr();
    assert!((v - direct).abs() < 1e-15);
    assert!(v > 0.05);
}

#[test]
fn nlos_beam_coherence_average_by_independent_quadrature() {
    let sc = Scenario::default().with_pointing(deg(80.0)).with_dr_lambda(1000.0);
    let b = Beam::from_degrees(10.0).unwrap();
    let lobes = SpatialLobeModel::default();
    let got = tb_nlos_mean(&sc, &b, &lobes, 0.5, Tolerance::default()).unwrap();
    // integrate directly in β with the normal density, truncated at the floor
    let tol = Tolerance::new(1e-14, 1e-12, 50).unwrap();
    let pdf = |x: f64| (-0.5 * ((x - lobes.mean) / lobes.std).powi(2)).exp();
    let hi = lobes.mean + 12.0 * lobes.std;
    let num = integrate(
        |x| pdf(x) * tb_nlos_given_beta(&sc, &b, x, 0.5),
        lobes.min_width,
        hi,
        tol,
    )
    .unwrap();
    let den = integrate(pdf, lobes.min_width, hi, tol).unwrap();
    assert!((got - num / den).abs() < 1e-9 * got);
}
