//! Physical scenario, receive beam and spatial-lobe statistics, plus the
//! pointing error a fixed beam accumulates while the receiver moves.

use std::f64::consts::PI;

use rand::Rng;
use rand_distr::{Distribution, Normal};

use crate::{Error, Result};

/// Propagation speed used to derive the wavelength. The rounded value makes
/// 60 GHz map to exactly 5 mm.
pub const SPEED_OF_LIGHT: f64 = 3.0e8;

/// Wraps an angle into `(-π, π]`.
pub fn normalize_angle(a: f64) -> f64 {
    if a > -PI && a <= PI {
        return a;
    }
    let mut x = a.rem_euclid(2.0 * PI);
    if x > PI {
        x -= 2.0 * PI;
    }
    x
}

/// Raw inputs for [`Scenario::new`]. Distances may be `f64::INFINITY` to
/// switch off the corresponding pointing error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScenarioParams {
    pub speed_mps: f64,
    pub carrier_hz: f64,
    pub distance_m: f64,
    pub scatter_radius_m: f64,
    pub pointing_rad: f64,
    pub los_angle_rad: f64,
    pub rician_k: f64,
}

impl Default for ScenarioParams {
    /// 30 m/s at 60 GHz, `D = 50 m`, `D_r = 0.5 m` (100 wavelengths).
    fn default() -> Self {
        ScenarioParams {
            speed_mps: 30.0,
            carrier_hz: 60e9,
            distance_m: 50.0,
            scatter_radius_m: 0.5,
            pointing_rad: 0.0,
            los_angle_rad: 0.0,
            rician_k: 0.0,
        }
    }
}

/// Immutable scenario with all derived quantities precomputed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scenario {
    speed: f64,
    carrier: f64,
    wavelength: f64,
    doppler: f64,
    pointing: f64,
    los_angle: f64,
    distance: f64,
    d_lambda: f64,
    scatter_radius: f64,
    dr_lambda: f64,
    rician_k: f64,
}

impl Scenario {
    pub fn new(p: ScenarioParams) -> Result<Self> {
        if !(p.speed_mps >= 0.0 && p.speed_mps.is_finite()) {
            return Err(Error::param("speed_mps", p.speed_mps, "must be finite and >= 0"));
        }
        if !(p.carrier_hz > 0.0 && p.carrier_hz.is_finite()) {
            return Err(Error::param("carrier_hz", p.carrier_hz, "must be finite and > 0"));
        }
        if !(p.distance_m > 0.0) {
            return Err(Error::param("distance_m", p.distance_m, "must be > 0"));
        }
        if !(p.scatter_radius_m > 0.0) {
            return Err(Error::param("scatter_radius_m", p.scatter_radius_m, "must be > 0"));
        }
        if !(p.rician_k >= 0.0) {
            return Err(Error::param("rician_k", p.rician_k, "must be >= 0"));
        }
        if !p.pointing_rad.is_finite() || !p.los_angle_rad.is_finite() {
            return Err(Error::param("angle", p.pointing_rad, "angles must be finite"));
        }
        let wavelength = SPEED_OF_LIGHT / p.carrier_hz;
        Ok(Scenario {
            speed: p.speed_mps,
            carrier: p.carrier_hz,
            wavelength,
            doppler: p.speed_mps / wavelength,
            pointing: normalize_angle(p.pointing_rad),
            los_angle: normalize_angle(p.los_angle_rad),
            distance: p.distance_m,
            d_lambda: p.distance_m / wavelength,
            scatter_radius: p.scatter_radius_m,
            dr_lambda: p.scatter_radius_m / wavelength,
            rician_k: p.rician_k,
        })
    }

    pub fn params(&self) -> ScenarioParams {
        ScenarioParams {
            speed_mps: self.speed,
            carrier_hz: self.carrier,
            distance_m: self.distance,
            scatter_radius_m: self.scatter_radius,
            pointing_rad: self.pointing,
            los_angle_rad: self.los_angle,
            rician_k: self.rician_k,
        }
    }

    /// Copy with a different beam pointing angle `μ_r`.
    pub fn with_pointing(&self, rad: f64) -> Self {
        let mut s = *self;
        s.pointing = normalize_angle(rad);
        s
    }

    /// Copy with a different LOS arrival angle.
    pub fn with_los_angle(&self, rad: f64) -> Self {
        let mut s = *self;
        s.los_angle = normalize_angle(rad);
        s
    }

    /// Copy with the scattering radius given in wavelengths.
    pub fn with_dr_lambda(&self, dr_lambda: f64) -> Self {
        let mut s = *self;
        s.dr_lambda = dr_lambda;
        s.scatter_radius = dr_lambda * self.wavelength;
        s
    }

    /// Copy with the transmitter distance given in wavelengths.
    pub fn with_d_lambda(&self, d_lambda: f64) -> Self {
        let mut s = *self;
        s.d_lambda = d_lambda;
        s.distance = d_lambda * self.wavelength;
        s
    }

    pub fn with_rician_k(&self, k: f64) -> Self {
        let mut s = *self;
        s.rician_k = k;
        s
    }

    pub fn speed(&self) -> f64 {
        self.speed
    }
    pub fn carrier(&self) -> f64 {
        self.carrier
    }
    pub fn wavelength(&self) -> f64 {
        self.wavelength
    }
    /// Maximum Doppler frequency `f_D = v/λ` in Hz.
    pub fn doppler(&self) -> f64 {
        self.doppler
    }
    /// Beam pointing angle `μ_r` relative to the direction of travel.
    pub fn pointing(&self) -> f64 {
        self.pointing
    }
    pub fn los_angle(&self) -> f64 {
        self.los_angle
    }
    pub fn distance(&self) -> f64 {
        self.distance
    }
    pub fn d_lambda(&self) -> f64 {
        self.d_lambda
    }
    pub fn scatter_radius(&self) -> f64 {
        self.scatter_radius
    }
    pub fn dr_lambda(&self) -> f64 {
        self.dr_lambda
    }
    pub fn rician_k(&self) -> f64 {
        self.rician_k
    }
}

impl Default for Scenario {
    fn default() -> Self {
        Scenario::new(ScenarioParams::default()).expect("default scenario is valid")
    }
}

/// Receive beam modeled as a von Mises pattern with concentration
/// `k_r = 1/θ²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Beam {
    theta: f64,
    kr: f64,
}

impl Beam {
    pub fn new(theta_rad: f64) -> Result<Self> {
        if !(theta_rad > 0.0 && theta_rad < PI) {
            return Err(Error::param("theta", theta_rad, "beamwidth must lie in (0, π)"));
        }
        Ok(Beam {
            theta: theta_rad,
            kr: 1.0 / (theta_rad * theta_rad),
        })
    }

    pub fn from_degrees(theta_deg: f64) -> Result<Self> {
        Beam::new(theta_deg.to_radians())
    }

    pub fn from_concentration(kr: f64) -> Result<Self> {
        if !(kr > 1.0 / (PI * PI)) || !kr.is_finite() {
            return Err(Error::param("kr", kr, "concentration must exceed 1/π²"));
        }
        Ok(Beam {
            theta: 1.0 / kr.sqrt(),
            kr,
        })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn kr(&self) -> f64 {
        self.kr
    }
}

/// Gaussian lobe-width model `β ~ N(m, σ²)`, truncated below at `min_width`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpatialLobeModel {
    pub mean: f64,
    pub std: f64,
    pub min_width: f64,
}

impl SpatialLobeModel {
    pub fn new(mean: f64, std: f64, min_width: f64) -> Result<Self> {
        if !(std >= 0.0) || !std.is_finite() {
            return Err(Error::param("std_AS", std, "must be finite and >= 0"));
        }
        if !(min_width > 0.0) {
            return Err(Error::param("min_width", min_width, "must be > 0"));
        }
        if std == 0.0 && mean < min_width {
            return Err(Error::param("mean_AS", mean, "degenerate model below the floor"));
        }
        Ok(SpatialLobeModel {
            mean,
            std,
            min_width,
        })
    }
}

impl Default for SpatialLobeModel {
    /// Urban 28 GHz statistics: 34.8° ± 25.7°, floor 1°.
    fn default() -> Self {
        SpatialLobeModel {
            mean: 34.8f64.to_radians(),
            std: 25.7f64.to_radians(),
            min_width: 1f64.to_radians(),
        }
    }
}

/// `Δμ(τ) = f_D τ sin(μ_r) / D_{r,λ}`.
pub fn pointing_error_nlos(sc: &Scenario, tau: f64) -> f64 {
    sc.doppler() * tau * sc.pointing().sin() / sc.dr_lambda()
}

/// `Δμ_LOS(τ) = f_D τ sin(α_LOS) / D_λ`.
pub fn pointing_error_los(sc: &Scenario, tau: f64) -> f64 {
    sc.doppler() * tau * sc.los_angle().sin() / sc.d_lambda()
}

/// One lobe width by rejection sampling from the truncated Gaussian.
pub fn sample_lobe_width<R: Rng + ?Sized>(model: &SpatialLobeModel, rng: &mut R) -> f64 {
    if model.std == 0.0 {
        return model.mean;
    }
    let normal = Normal::new(model.mean, model.std).expect("std validated");
    loop {
        let b = normal.sample(rng);
        if b >= model.min_width {
            return b;
        }
    }
}

/// Overrides read from a plain-text `key = value` file.
///
/// Recognized keys: `speed_mps`, `carrier_ghz`, `distance_m`,
/// `scatter_radius_m`, `pointing_deg`, `los_deg`, `rician_k`,
/// `lobe_mean_deg`, `lobe_std_deg`. Blank lines and `#` comments are
/// ignored.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ScenarioConfig {
    pub speed_mps: Option<f64>,
    pub carrier_ghz: Option<f64>,
    pub distance_m: Option<f64>,
    pub scatter_radius_m: Option<f64>,
    pub pointing_deg: Option<f64>,
    pub los_deg: Option<f64>,
    pub rician_k: Option<f64>,
    pub lobe_mean_deg: Option<f64>,
    pub lobe_std_deg: Option<f64>,
}

impl ScenarioConfig {
    pub const KEYS: &'static [&'static str] = &[
        "speed_mps",
        "carrier_ghz",
        "distance_m",
        "scatter_radius_m",
        "pointing_deg",
        "los_deg",
        "rician_k",
        "lobe_mean_deg",
        "lobe_std_deg",
    ];

    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = ScenarioConfig::default();
        for raw in text.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| Error::Config {
                key: line.to_string(),
                message: "expected `key = value`".into(),
            })?;
            let key = key.trim();
            let value: f64 = value.trim().parse().map_err(|_| Error::Config {
                key: key.to_string(),
                message: format!("`{}` is not a number", value.trim()),
            })?;
            if !value.is_finite() {
                return Err(Error::Config {
                    key: key.to_string(),
                    message: "value must be finite".into(),
                });
            }
            let slot = match key {
                "speed_mps" => &mut cfg.speed_mps,
                "carrier_ghz" => &mut cfg.carrier_ghz,
                "distance_m" => &mut cfg.distance_m,
                "scatter_radius_m" => &mut cfg.scatter_radius_m,
                "pointing_deg" => &mut cfg.pointing_deg,
                "los_deg" => &mut cfg.los_deg,
                "rician_k" => &mut cfg.rician_k,
                "lobe_mean_deg" => &mut cfg.lobe_mean_deg,
                "lobe_std_deg" => &mut cfg.lobe_std_deg,
                _ => {
                    return Err(Error::Config {
                        key: key.to_string(),
                        message: "unknown key".into(),
                    })
                }
            };
            *slot = Some(value);
        }
        Ok(cfg)
    }

    /// Applies the overrides on top of `base`, validating the result.
    ///
    /// When `pointing_deg` is given without `los_deg`, the LOS angle follows
    /// the pointing angle (beam aligned to the LOS path).
    pub fn apply(
        &self,
        base: ScenarioParams,
        lobes: SpatialLobeModel,
    ) -> Result<(Scenario, SpatialLobeModel)> {
        let mut p = base;
        if let Some(v) = self.speed_mps {
            p.speed_mps = v;
        }
        if let Some(v) = self.carrier_ghz {
            p.carrier_hz = v * 1e9;
        }
        if let Some(v) = self.distance_m {
            p.distance_m = v;
        }
        if let Some(v) = self.scatter_radius_m {
            p.scatter_radius_m = v;
        }
        if let Some(v) = self.pointing_deg {
            p.pointing_rad = v.to_radians();
            p.los_angle_rad = v.to_radians();
        }
        if let Some(v) = self.los_deg {
            p.los_angle_rad = v.to_radians();
        }
        if let Some(v) = self.rician_k {
            p.rician_k = v;
        }
        let sc = Scenario::new(p).map_err(|e| config_error(&e))?;
        let lobes = SpatialLobeModel::new(
            self.lobe_mean_deg.map_or(lobes.mean, f64::to_radians),
            self.lobe_std_deg.map_or(lobes.std, f64::to_radians),
            lobes.min_width,
        )
        .map_err(|e| config_error(&e))?;
        Ok((sc, lobes))
    }
}

fn config_error(e: &Error) -> Error {
    match e {
        Error::InvalidParameter { name, reason, .. } => Error::Config {
            key: match *name {
                "carrier_hz" => "carrier_ghz",
                "angle" => "pointing_deg",
                "std_AS" => "lobe_std_deg",
                "mean_AS" => "lobe_mean_deg",
                other => other,
            }
            .to_string(),
            message: (*reason).to_string(),
        },
        other => other.clone(),
    }
}
