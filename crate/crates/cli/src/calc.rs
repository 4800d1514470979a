//! One-shot calculators behind `calc`. Each returns the text to print.

use anyhow::{bail, Context, Result};
use beamcoh::coherence::*;
use beamcoh::correlation::corr_nlos_exact;
use beamcoh::link::{antenna_gain, default_nu_grid, mi_lower_bound, optimal_pilot_spacing, LinkConfig};
use beamcoh::{db_to_linear, linear_to_db, Beam, Scenario, ScenarioParams, SpatialLobeModel, Tolerance};
use clap::{Args, ValueEnum};

/// Four significant digits with an auto-scaled time unit.
pub fn fmt_time(seconds: f64) -> String {
    let (v, unit) = if seconds.abs() >= 1.0 {
        (seconds, "s")
    } else if seconds.abs() >= 1e-3 {
        (seconds * 1e3, "ms")
    } else {
        (seconds * 1e6, "us")
    };
    format!("{} {unit}", sig4(v))
}

fn sig4(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let mag = v.abs().log10().floor() as i32;
    let decimals = (3 - mag).max(0) as usize;
    format!("{v:.decimals$}")
}

#[derive(Debug, Clone, Args)]
pub struct ScenarioArgs {
    /// Receiver speed in m/s.
    #[arg(long, default_value_t = 30.0)]
    pub speed_mps: f64,
    /// Carrier frequency in GHz.
    #[arg(long, default_value_t = 60.0)]
    pub carrier_ghz: f64,
    /// Beam pointing angle relative to the direction of travel, degrees.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub mu_deg: f64,
}

impl ScenarioArgs {
    fn scenario(&self) -> Result<Scenario> {
        let p = ScenarioParams {
            speed_mps: self.speed_mps,
            carrier_hz: self.carrier_ghz * 1e9,
            pointing_rad: self.mu_deg.to_radians(),
            los_angle_rad: self.mu_deg.to_radians(),
            ..ScenarioParams::default()
        };
        Scenario::new(p).context("invalid scenario flags")
    }
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct BeamArgs {
    /// Half-power-style beamwidth parameter θ in degrees.
    #[arg(long)]
    pub theta_deg: Option<f64>,
    /// Beamwidth θ in radians.
    #[arg(long)]
    pub theta_rad: Option<f64>,
}

impl BeamArgs {
    fn beam(&self) -> Result<Beam> {
        let b = match (self.theta_deg, self.theta_rad) {
            (Some(d), _) => Beam::from_degrees(d),
            (None, Some(r)) => Beam::new(r),
            (None, None) => bail!("one of --theta-deg or --theta-rad is required"),
        };
        b.context("invalid beamwidth")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Los,
    Nlos,
}

#[derive(Debug, Clone, Args)]
pub struct CoherenceArgs {
    #[command(flatten)]
    pub beam: BeamArgs,
    #[command(flatten)]
    pub scenario: ScenarioArgs,
    /// Correlation threshold R.
    #[arg(long = "R", default_value_t = 0.5)]
    pub r: f64,
    /// Scattering radius in wavelengths.
    #[arg(long, default_value_t = 100.0)]
    pub dr_lambda: f64,
    /// Ignore receiver-motion pointing error.
    #[arg(long)]
    pub no_pointing: bool,
}

pub fn coherence(a: &CoherenceArgs) -> Result<String> {
    let beam = a.beam.beam()?;
    let sc = a.scenario.scenario()?.with_dr_lambda(a.dr_lambda);
    if a.no_pointing {
        let t = tc_no_pointing(&sc, &beam, a.r).context("invalid --R")?;
        return Ok(format!("Tc = {}\n", fmt_time(t)));
    }
    let spec = CoherenceSpec::new(a.r, 0.5, 1e4 / sc.doppler())
        .context("invalid --R")?
        .with_scan_steps(1 << 17);
    let exact = tc_numeric(|t| corr_nlos_exact(&sc, &beam, t), &spec)?;
    let show = |v: beamcoh::Result<f64>| match v {
        Ok(t) => fmt_time(t),
        Err(e) => format!("n/a ({e})"),
    };
    Ok(format!(
        "Tc = {}\n  small-angle form: {}\n  general form:     {}\n  worst-case form:  {}\n",
        fmt_time(exact),
        show(tc_small_mu(&sc, &beam, a.r)),
        show(tc_general_mu(&sc, &beam, a.r)),
        show(tc_worst_case(&sc, &beam, a.r)),
    ))
}

#[derive(Debug, Clone, Args)]
pub struct GainArgs {
    #[command(flatten)]
    pub beam: BeamArgs,
}

pub fn gain(a: &GainArgs) -> Result<String> {
    let g = antenna_gain(&a.beam.beam()?);
    Ok(format!("Gain = {} dB ({} linear)\n", sig4(linear_to_db(g)), sig4(g)))
}

#[derive(Debug, Clone, Args)]
pub struct BeamCoherenceArgs {
    #[arg(long, value_enum)]
    pub mode: Mode,
    #[command(flatten)]
    pub beam: BeamArgs,
    #[command(flatten)]
    pub scenario: ScenarioArgs,
    /// Beam-gain threshold ζ.
    #[arg(long, default_value_t = 0.5)]
    pub zeta: f64,
    /// Transmitter-receiver distance in wavelengths (LOS).
    #[arg(long, default_value_t = 1e4)]
    pub d_lambda: f64,
    /// Scattering radius in wavelengths (NLOS).
    #[arg(long, default_value_t = 1000.0)]
    pub dr_lambda: f64,
    /// Mean spatial lobe width in degrees (NLOS).
    #[arg(long, default_value_t = 34.8)]
    pub lobe_mean_deg: f64,
    /// Spatial lobe width standard deviation in degrees (NLOS).
    #[arg(long, default_value_t = 25.7)]
    pub lobe_std_deg: f64,
}

pub fn beam_coherence(a: &BeamCoherenceArgs) -> Result<String> {
    let beam = a.beam.beam()?;
    let sc = a.scenario.scenario()?;
    let t = match a.mode {
        Mode::Los => tb_los(&sc.with_d_lambda(a.d_lambda), &beam, a.zeta)?,
        Mode::Nlos => {
            let lobes = SpatialLobeModel::new(
                a.lobe_mean_deg.to_radians(),
                a.lobe_std_deg.to_radians(),
                SpatialLobeModel::default().min_width,
            )
            .context("invalid lobe flags")?;
            tb_nlos_mean(&sc.with_dr_lambda(a.dr_lambda), &beam, &lobes, a.zeta, Tolerance::default())?
        }
    };
    Ok(format!("TB = {}\n", fmt_time(t)))
}

#[derive(Debug, Clone, Args)]
pub struct MiBoundArgs {
    #[command(flatten)]
    pub beam: BeamArgs,
    #[command(flatten)]
    pub scenario: ScenarioArgs,
    /// Scattering radius in wavelengths.
    #[arg(long, default_value_t = 100.0)]
    pub dr_lambda: f64,
    /// Coherence bandwidth in MHz; the symbol time is its inverse.
    #[arg(long, default_value_t = 10.0)]
    pub bandwidth_mhz: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub snr_data_db: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub snr_pilot_db: f64,
    /// Pilot spacing in symbols.
    #[arg(long, default_value_t = 64)]
    pub nu: usize,
    /// Print the bound over ν = 2, 4, …, 1024 and the best spacing.
    #[arg(long)]
    pub sweep: bool,
}

pub fn mi_bound(a: &MiBoundArgs) -> Result<String> {
    let beam = a.beam.beam()?;
    let sc = a.scenario.scenario()?.with_dr_lambda(a.dr_lambda);
    let link = LinkConfig::from_bandwidth(
        db_to_linear(a.snr_data_db),
        db_to_linear(a.snr_pilot_db),
        a.nu,
        a.bandwidth_mhz * 1e6,
    )
    .context("invalid link flags")?;
    let corr = |t: f64| corr_nlos_exact(&sc, &beam, t);
    if !a.sweep {
        return Ok(format!("I_low = {} nats/symbol\n", sig4(mi_lower_bound(&beam, &link, corr))));
    }
    let grid = default_nu_grid();
    let mut out = String::from("nu,I_low_nats\n");
    for &nu in &grid {
        let v = mi_lower_bound(&beam, &link.with_nu(nu)?, corr);
        out.push_str(&format!("{nu},{}\n", sig4(v)));
    }
    let best = optimal_pilot_spacing(&beam, &link, corr, &grid)?;
    out.push_str(&format!("best nu = {best}\n"));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn time_units() {
        assert_eq!(fmt_time(3.372560705234251e-3), "3.373 ms");
        assert_eq!(fmt_time(1.1307261228845293), "1.131 s");
        assert_eq!(fmt_time(1.78e-4), "178.0 us");
        assert_eq!(fmt_time(12.5), "12.50 s");
    }
}
