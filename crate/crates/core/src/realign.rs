//! Short-term (every `T_c`) versus long-term (every `T_B`) beam realignment
//! over a two-path channel with Rayleigh fading on each path.

use crate::coherence::{tb_nlos_mean, tc_numeric, tc_worst_case, CoherenceSpec};
use crate::correlation::corr_nlos_exact;
use crate::link::{antenna_gain, CorrelationProfile, LinkConfig};
use crate::math::{integrate, ComplexValue, Tolerance};
use crate::scenario::{Beam, Scenario, SpatialLobeModel};
use crate::{Error, Result};

/// How the pilot SNR relates to the faded data SNR inside the expectation.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum PilotSnr {
    /// Pilots see the same fading state as data.
    #[default]
    Coupled,
    /// Pilots keep a fixed SNR, excluding antenna gain.
    Fixed(f64),
}

/// Which channel coherence time sets the short-term realignment period.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ShortPeriod {
    /// Broadside closed form.
    #[default]
    WorstCase,
    /// Numeric first crossing of the exact NLOS correlation.
    Numeric,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealignConfig {
    pub delta_ratio: f64,
    pub threshold_r: f64,
    pub zeta: f64,
    /// `None` selects the overhead-minimizing number of codebook levels.
    pub codebook_levels: Option<u32>,
    pub coverage_theta0: f64,
    pub train_per_beam: f64,
    pub mean_snr_path1: f64,
    pub pilot: PilotSnr,
    pub short_period: ShortPeriod,
}

impl Default for RealignConfig {
    fn default() -> Self {
        RealignConfig {
            delta_ratio: 2.0,
            threshold_r: 0.5,
            zeta: 0.5,
            codebook_levels: None,
            coverage_theta0: std::f64::consts::PI,
            train_per_beam: 1e-6,
            mean_snr_path1: 1.0,
            pilot: PilotSnr::Coupled,
            short_period: ShortPeriod::WorstCase,
        }
    }
}

impl RealignConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.delta_ratio >= 1.0) {
            return Err(Error::param("delta_ratio", self.delta_ratio, "must be >= 1"));
        }
        if !(self.zeta > 0.0 && self.zeta <= 1.0) {
            return Err(Error::param("zeta", self.zeta, "must lie in (0, 1]"));
        }
        if !(self.threshold_r > 0.0 && self.threshold_r <= 1.0) {
            return Err(Error::param("threshold_R", self.threshold_r, "must lie in (0, 1]"));
        }
        if !(self.mean_snr_path1 > 0.0) {
            return Err(Error::param("mean_snr_path1", self.mean_snr_path1, "must be > 0"));
        }
        if !(self.train_per_beam >= 0.0) {
            return Err(Error::param("train_per_beam", self.train_per_beam, "must be >= 0"));
        }
        if let PilotSnr::Fixed(v) = self.pilot {
            if !(v >= 0.0) {
                return Err(Error::param("pilot_snr", v, "must be >= 0"));
            }
        }
        Ok(())
    }

    pub fn with_delta_db(mut self, db: f64) -> Self {
        self.delta_ratio = crate::db_to_linear(db);
        self
    }

    /// `γ̄₂ = γ̄₁/Δ`.
    pub fn mean_snr_path2(&self) -> f64 {
        self.mean_snr_path1 / self.delta_ratio
    }
}

/// Probabilities that a sweep picks path 1 or path 2 under unit-mean
/// exponential fading: `(Δ/(1+Δ), 1/(1+Δ))`.
pub fn selection_probs(delta: f64) -> Result<(f64, f64)> {
    if !(delta >= 1.0) {
        return Err(Error::param("delta", delta, "must be >= 1"));
    }
    if delta.is_infinite() {
        return Ok((1.0, 0.0));
    }
    Ok((delta / (1.0 + delta), 1.0 / (1.0 + delta)))
}

/// Density of `max(P₁, P₂)/P_n`.
pub fn snr_pdf_short(gamma: f64, g1bar: f64, g2bar: f64) -> f64 {
    if gamma < 0.0 {
        return 0.0;
    }
    let (a, b) = (1.0 / g1bar, 1.0 / g2bar);
    a * (-a * gamma).exp() + b * (-b * gamma).exp() - (a + b) * (-(a + b) * gamma).exp()
}

/// CDF of [`snr_pdf_short`].
pub fn snr_cdf_short(gamma: f64, g1bar: f64, g2bar: f64) -> f64 {
    if gamma <= 0.0 {
        return 0.0;
    }
    let (a, b) = (1.0 / g1bar, 1.0 / g2bar);
    1.0 - (-a * gamma).exp() - (-b * gamma).exp() + (-(a + b) * gamma).exp()
}

/// Exponential density with mean `gibar`.
pub fn snr_pdf_long(gamma: f64, gibar: f64) -> f64 {
    if gamma < 0.0 {
        return 0.0;
    }
    (-gamma / gibar).exp() / gibar
}

/// `(θ₀/θ)^{1/ℓ}`.
pub fn beams_per_level(theta: f64, theta0: f64, levels: u32) -> f64 {
    (theta0 / theta).powf(1.0 / levels as f64)
}

/// Hierarchical sweep time `ℓ (θ₀/θ)^{2/ℓ} T_TRN`.
pub fn sweep_overhead_with(theta: f64, theta0: f64, levels: u32, t_trn: f64) -> Result<f64> {
    if !(theta > 0.0) {
        return Err(Error::param("theta", theta, "must be > 0"));
    }
    let per_level = beams_per_level(theta, theta0, levels.max(1));
    // tolerate rounding when θ₀/θ is exactly a power of two
    if levels == 0 || per_level < 2.0 - 1e-12 {
        return Err(Error::InvalidCodebook {
            levels,
            beams_per_level: per_level,
        });
    }
    Ok(levels as f64 * per_level * per_level * t_trn)
}

/// Number of levels minimizing the sweep time subject to at least two beams
/// per level.
pub fn optimal_levels(theta: f64, theta0: f64) -> Result<u32> {
    let mut best: Option<(u32, f64)> = None;
    for levels in 1.. {
        match sweep_overhead_with(theta, theta0, levels, 1.0) {
            Ok(t) => {
                if best.is_none_or(|(_, b)| t < b) {
                    best = Some((levels, t));
                }
            }
            Err(e) => {
                return best.map(|(l, _)| l).ok_or(e);
            }
        }
    }
    unreachable!()
}

/// Sweep time for `theta` under `cfg`, using its level override if set.
pub fn sweep_overhead(theta: f64, cfg: &RealignConfig) -> Result<f64> {
    let levels = match cfg.codebook_levels {
        Some(l) => l,
        None => optimal_levels(theta, cfg.coverage_theta0)?,
    };
    sweep_overhead_with(theta, cfg.coverage_theta0, levels, cfg.train_per_beam)
}

/// `max(0, 1 − overhead/coherence)`.
pub fn temporal_efficiency(coherence: f64, overhead: f64) -> Result<f64> {
    if !(coherence > 0.0) {
        return Err(Error::param("coherence", coherence, "must be > 0"));
    }
    Ok((1.0 - overhead / coherence).max(0.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Policy {
    Short,
    Long,
}

/// Realignment period of each policy: a channel coherence time for
/// [`Policy::Short`] and the lobe-averaged NLOS beam coherence time for
/// [`Policy::Long`].
pub fn realignment_period(
    policy: Policy,
    sc: &Scenario,
    beam: &Beam,
    lobes: &SpatialLobeModel,
    cfg: &RealignConfig,
) -> Result<f64> {
    match (policy, cfg.short_period) {
        (Policy::Short, ShortPeriod::WorstCase) => tc_worst_case(sc, beam, cfg.threshold_r),
        (Policy::Short, ShortPeriod::Numeric) => {
            let spec = CoherenceSpec::new(cfg.threshold_r, cfg.zeta, 1e4 / sc.doppler())?
                .with_scan_steps(1 << 17);
            tc_numeric(|t| corr_nlos_exact(sc, beam, t), &spec)
        }
        (Policy::Long, _) => tb_nlos_mean(sc, beam, lobes, cfg.zeta, Tolerance::default()),
    }
}

fn quad_tol() -> Tolerance {
    Tolerance::new(1e-12, 1e-9, 40).expect("valid")
}

/// `E[I_low(θ, γ, ν)]` for `γ` with the given density, integrated over
/// `[0, cap]`.
pub fn expected_bound<P: Fn(f64) -> f64>(
    pdf: P,
    cap: f64,
    profile: &CorrelationProfile,
    gain: f64,
    pilot: PilotSnr,
) -> Result<f64> {
    let fixed_psi = match pilot {
        PilotSnr::Fixed(v) => Some(profile.psi(v * gain)),
        PilotSnr::Coupled => None,
    };
    integrate(
        |g| {
            let psi = fixed_psi.unwrap_or_else(|| profile.psi(g * gain));
            pdf(g) * profile.bound(psi, g * gain)
        },
        0.0,
        cap,
        quad_tol(),
    )
}

/// Mean SNR multiple at which the exponential densities are truncated.
pub const SNR_CAP_FACTOR: f64 = 40.0;

/// Expected bound over the policy's SNR distribution, before the temporal
/// efficiency is applied.
pub fn expected_policy_bound<F: Fn(f64) -> ComplexValue>(
    policy: Policy,
    beam: &Beam,
    link: &LinkConfig,
    cfg: &RealignConfig,
    corr: F,
) -> Result<f64> {
    cfg.validate()?;
    let profile = CorrelationProfile::new(corr, link.pilot_spacing_nu, link.symbol_t);
    let gain = antenna_gain(beam);
    let (g1, g2) = (cfg.mean_snr_path1, cfg.mean_snr_path2());
    match policy {
        Policy::Short => expected_bound(
            |g| snr_pdf_short(g, g1, g2),
            SNR_CAP_FACTOR * g1,
            &profile,
            gain,
            cfg.pilot,
        ),
        Policy::Long => {
            let (p1, p2) = selection_probs(cfg.delta_ratio)?;
            let e1 = expected_bound(|g| snr_pdf_long(g, g1), SNR_CAP_FACTOR * g1, &profile, gain, cfg.pilot)?;
            let e2 = if p2 > 0.0 {
                expected_bound(|g| snr_pdf_long(g, g2), SNR_CAP_FACTOR * g2, &profile, gain, cfg.pilot)?
            } else {
                0.0
            };
            Ok(p1 * e1 + p2 * e2)
        }
    }
}

/// `C = η · E[I_low]` in nats per symbol for a realignment period
/// `coherence`. The data SNR of `link` is replaced by the faded SNR.
pub fn spectral_efficiency<F: Fn(f64) -> ComplexValue>(
    policy: Policy,
    theta: f64,
    beam: &Beam,
    link: &LinkConfig,
    cfg: &RealignConfig,
    corr: F,
    coherence: f64,
) -> Result<f64> {
    let eta = temporal_efficiency(coherence, sweep_overhead(theta, cfg)?)?;
    if eta == 0.0 {
        return Ok(0.0);
    }
    Ok(eta * expected_policy_bound(policy, beam, link, cfg, corr)?)
}

/// Both policies at one beamwidth, with periods from [`realignment_period`]
/// and the exact NLOS correlation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolicyComparison {
    pub theta: f64,
    pub period_short: f64,
    pub period_long: f64,
    pub overhead: f64,
    pub c_short: f64,
    pub c_long: f64,
}

pub fn compare_policies(
    sc: &Scenario,
    beam: &Beam,
    lobes: &SpatialLobeModel,
    link: &LinkConfig,
    cfg: &RealignConfig,
) -> Result<PolicyComparison> {
    let theta = beam.theta();
    let corr = |t: f64| corr_nlos_exact(sc, beam, t);
    let period_short = realignment_period(Policy::Short, sc, beam, lobes, cfg)?;
    let period_long = realignment_period(Policy::Long, sc, beam, lobes, cfg)?;
    Ok(PolicyComparison {
        theta,
        period_short,
        period_long,
        overhead: sweep_overhead(theta, cfg)?,
        c_short: spectral_efficiency(Policy::Short, theta, beam, link, cfg, corr, period_short)?,
        c_long: spectral_efficiency(Policy::Long, theta, beam, link, cfg, corr, period_long)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selection_examples() {
        assert_eq!(selection_probs(1.0).unwrap(), (0.5, 0.5));
        let (p1, p2) = selection_probs(2.0).unwrap();
        assert!((p1 - 2.0 / 3.0).abs() < 1e-15 && (p2 - 1.0 / 3.0).abs() < 1e-15);
        assert!(selection_probs(0.5).is_err());
    }

    #[test]
    fn short_density_limits() {
        let g1 = 2.0;
        for &g in &[0.3, 1.0, 5.0] {
            let v = snr_pdf_short(g, g1, 1e-9);
            assert!((v - snr_pdf_long(g, g1)).abs() < 1e-12);
        }
        assert_eq!(snr_pdf_short(-1.0, 1.0, 1.0), 0.0);
    }

    #[test]
    fn sweep_examples() {
        let cfg = RealignConfig {
            codebook_levels: Some(1),
            ..RealignConfig::default()
        };
        let t0 = cfg.coverage_theta0;
        assert!(matches!(
            sweep_overhead(t0, &cfg),
            Err(Error::InvalidCodebook { .. })
        ));
        assert!((sweep_overhead_with(t0 / 2.0, t0, 1, 1e-6).unwrap() - 4e-6).abs() < 1e-18);
        let theta = 10f64.to_radians();
        let two = sweep_overhead_with(theta, t0, 2, 1e-6).unwrap();
        assert!((two - 36e-6).abs() < 1e-12);
        assert_eq!(optimal_levels(theta, t0).unwrap(), 4);
        let best = sweep_overhead(theta, &RealignConfig::default()).unwrap();
        assert!((best - 4.0 * 18f64.sqrt() * 1e-6).abs() < 1e-15);
        assert!((best - 16.97e-6).abs() < 1e-8);
        assert!(optimal_levels(t0 * 0.9, t0).is_err());
    }

    #[test]
    fn efficiency_clamps() {
        assert_eq!(temporal_efficiency(1.0, 0.0).unwrap(), 1.0);
        assert_eq!(temporal_efficiency(1.0, 1.0).unwrap(), 0.0);
        assert_eq!(temporal_efficiency(1.0, 3.0).unwrap(), 0.0);
        assert!(temporal_efficiency(0.0, 1.0).is_err());
    }

    #[test]
    fn long_policy_with_dominant_path() {
        let beam = Beam::from_degrees(10.0).unwrap();
        let link = LinkConfig::from_bandwidth(1.0, 1.0, 64, 10e6).unwrap();
        let sc = Scenario::default().with_pointing(std::f64::consts::FRAC_PI_2);
        let corr = |t: f64| corr_nlos_exact(&sc, &beam, t);
        let cfg = RealignConfig {
            delta_ratio: f64::INFINITY,
            ..RealignConfig::default()
        };
        let long = expected_policy_bound(Policy::Long, &beam, &link, &cfg, corr).unwrap();
        let profile = CorrelationProfile::new(corr, 64, 1e-7);
        let direct = expected_bound(
            |g| snr_pdf_long(g, 1.0),
            40.0,
            &profile,
            antenna_gain(&beam),
            PilotSnr::Coupled,
        )
        .unwrap();
        assert_eq!(long, direct);
    }
}
