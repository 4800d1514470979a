//! Figure experiments. Each one resolves its parameters from built-in
//! defaults plus an optional config, and returns a [`RunOutput`].

use std::fmt;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use beamcoh::coherence::*;
use beamcoh::correlation::{corr_combined, corr_nlos_approx, corr_nlos_exact};
use beamcoh::link::{antenna_gain, default_nu_grid, mi_lower_bound, LinkConfig};
use beamcoh::mcsim::{empirical_correlation, NlosSimulator};
use beamcoh::realign::{compare_policies, PilotSnr, RealignConfig, ShortPeriod};
use beamcoh::scenario::ScenarioConfig;
use beamcoh::{db_to_linear, linear_to_db, Beam, Scenario, ScenarioParams, SpatialLobeModel, Tolerance};
use rayon::prelude::*;

use crate::config::{RunConfig, Settings};
use crate::output::{RunOutput, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Experiment {
    Fig3,
    Fig4,
    Fig5,
    Fig6,
    Fig7,
    Fig8,
    Fig9,
    Custom,
}

impl Experiment {
    pub const ALL: [Experiment; 8] = [
        Experiment::Fig3,
        Experiment::Fig4,
        Experiment::Fig5,
        Experiment::Fig6,
        Experiment::Fig7,
        Experiment::Fig8,
        Experiment::Fig9,
        Experiment::Custom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Experiment::Fig3 => "fig3",
            Experiment::Fig4 => "fig4",
            Experiment::Fig5 => "fig5",
            Experiment::Fig6 => "fig6",
            Experiment::Fig7 => "fig7",
            Experiment::Fig8 => "fig8",
            Experiment::Fig9 => "fig9",
            Experiment::Custom => "custom",
        }
    }
}

impl fmt::Display for Experiment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Experiment {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        Experiment::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Experiment::ALL.iter().map(|e| e.name()).collect();
                anyhow!("unknown experiment `{s}` (expected one of {})", names.join(", "))
            })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSpec {
    pub experiment: Experiment,
    pub config_path: Option<PathBuf>,
    pub output_path: PathBuf,
    pub seed: u64,
}

/// Path of the JSON manifest written next to `csv`.
pub fn manifest_path(csv: &Path) -> PathBuf {
    csv.with_extension("manifest.json")
}

/// Runs the experiment and writes the CSV plus its JSON manifest.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<RunOutput> {
    let cfg = match &spec.config_path {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::default(),
    };
    let out = compute(spec.experiment, &cfg, spec.seed)?;
    let path = &spec.output_path;
    let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    let mut w = BufWriter::new(file);
    out.write_csv(&mut w)
        .and_then(|_| w.flush())
        .with_context(|| format!("writing {}", path.display()))?;
    let mpath = manifest_path(path);
    let text = serde_json::to_string_pretty(&out.manifest_json())? + "\n";
    std::fs::write(&mpath, text).with_context(|| format!("writing {}", mpath.display()))?;
    Ok(out)
}

pub fn compute(experiment: Experiment, cfg: &RunConfig, seed: u64) -> Result<RunOutput> {
    let run = match experiment {
        Experiment::Fig3 => fig3(cfg, seed),
        Experiment::Fig4 => fig4(cfg),
        Experiment::Fig5 => fig5(cfg),
        Experiment::Fig6 => fig6(cfg),
        Experiment::Fig7 => fig7(cfg),
        Experiment::Fig8 => fig8(cfg),
        Experiment::Fig9 => fig9(cfg),
        Experiment::Custom => custom(cfg),
    };
    let (manifest, table) = run.with_context(|| format!("experiment {experiment}"))?;
    Ok(RunOutput {
        experiment: experiment.name().into(),
        seed,
        manifest,
        table,
    })
}

/// Scenario keys that are set in `cfg`.
fn given_scenario_keys(c: &ScenarioConfig) -> Vec<&'static str> {
    let slots = [
        c.speed_mps,
        c.carrier_ghz,
        c.distance_m,
        c.scatter_radius_m,
        c.pointing_deg,
        c.los_deg,
        c.rician_k,
        c.lobe_mean_deg,
        c.lobe_std_deg,
    ];
    ScenarioConfig::KEYS
        .iter()
        .zip(slots)
        .filter(|(_, v)| v.is_some())
        .map(|(k, _)| *k)
        .collect()
}

struct Setup {
    sc: Scenario,
    lobes: SpatialLobeModel,
    settings: Settings,
    manifest: Vec<(String, String)>,
}

impl Setup {
    fn note(&mut self, key: &str, value: impl fmt::Display) {
        self.manifest.push((key.to_string(), value.to_string()));
    }
}

const NLOS_ONLY: &[&str] = &["los_deg", "rician_k", "lobe_mean_deg", "lobe_std_deg"];

fn setup(
    name: &str,
    cfg: &RunConfig,
    base: ScenarioParams,
    fixed: &[&str],
    defaults: &[(&'static str, f64)],
) -> Result<Setup> {
    if let Some(k) = given_scenario_keys(&cfg.scenario).into_iter().find(|k| fixed.contains(k)) {
        bail!("config key `{k}`: fixed by experiment {name}");
    }
    let (sc, lobes) = cfg.scenario.apply(base, SpatialLobeModel::default())?;
    let settings = Settings::resolve(defaults, &cfg.settings, name)?;
    let mut manifest = vec![
        ("speed_mps".into(), sc.speed().to_string()),
        ("carrier_ghz".into(), (sc.carrier() / 1e9).to_string()),
        ("distance_m".into(), sc.distance().to_string()),
        ("scatter_radius_m".into(), sc.scatter_radius().to_string()),
        ("wavelength_m".into(), sc.wavelength().to_string()),
        ("doppler_hz".into(), sc.doppler().to_string()),
        ("d_lambda".into(), sc.d_lambda().to_string()),
        ("dr_lambda".into(), sc.dr_lambda().to_string()),
    ];
    for (k, v) in [
        ("pointing_deg", sc.pointing().to_degrees()),
        ("los_deg", sc.los_angle().to_degrees()),
        ("rician_k", sc.rician_k()),
        ("lobe_mean_deg", lobes.mean.to_degrees()),
        ("lobe_std_deg", lobes.std.to_degrees()),
    ] {
        if !fixed.contains(&k) {
            manifest.push((k.into(), v.to_string()));
        }
    }
    manifest.extend(settings.iter().map(|(k, v)| (k.to_string(), v.to_string())));
    Ok(Setup {
        sc,
        lobes,
        settings,
        manifest,
    })
}

/// `lo, lo+step, …, hi`; the span must be a whole number of steps.
fn grid(s: &Settings, prefix: &str) -> Result<Vec<f64>> {
    let lo = s.get(&format!("{prefix}_min"));
    let hi = s.get(&format!("{prefix}_max"));
    let step = s.positive(&format!("{prefix}_step"))?;
    let n = ((hi - lo) / step).round();
    if n.is_nan() || n < 0.0 || (lo + n * step - hi).abs() > 1e-9 * hi.abs().max(step) {
        bail!("config keys `{prefix}_min/_max/_step`: span must be a whole number of steps");
    }
    Ok((0..=n as usize).map(|i| lo + i as f64 * step).collect())
}

/// Number of `fd_tau_step` steps up to `fd_tau_max`.
fn lag_steps(s: &Settings) -> Result<(usize, f64)> {
    let step = s.positive("fd_tau_step")?;
    let max = s.positive("fd_tau_max")?;
    let n = (max / step).round();
    if (n * step - max).abs() > 1e-9 * max {
        bail!("config key `fd_tau_max`: must be a whole number of `fd_tau_step`");
    }
    Ok((n as usize, step))
}

fn series(values: &[f64]) -> String {
    values.iter().map(f64::to_string).collect::<Vec<_>>().join(";")
}

fn beam_deg(s: &Settings, key: &str) -> Result<Beam> {
    Beam::from_degrees(s.get(key)).with_context(|| format!("config key `{key}`"))
}

fn numeric_spec(sc: &Scenario, r: f64) -> Result<CoherenceSpec> {
    Ok(CoherenceSpec::new(r, 0.5, 1e4 / sc.doppler())
        .context("config key `R`")?
        .with_scan_steps(1 << 17))
}

fn or_nan(r: beamcoh::Result<f64>) -> f64 {
    r.unwrap_or(f64::NAN)
}

type Run = Result<(Vec<(String, String)>, Table)>;

fn fig3(cfg: &RunConfig, seed: u64) -> Run {
    let defaults = [
        ("kr", 50.0),
        ("fd_tau_max", 0.5),
        ("fd_tau_step", 0.01),
        ("n_sinusoids", 10_000.0),
        ("n_seeds", 200.0),
    ];
    let fixed = [&["pointing_deg"], NLOS_ONLY].concat();
    let mut st = setup("fig3", cfg, ScenarioParams::default(), &fixed, &defaults)?;
    let s = &st.settings;
    let beam = Beam::from_concentration(s.get("kr")).context("config key `kr`")?;
    let (n, step) = lag_steps(s)?;
    let n_sin = s.count("n_sinusoids")?;
    let n_seeds = s.count("n_seeds")?;
    let mus = [10.0f64, 80.0];
    let mut table = Table::new(&["mu_deg", "fD_tau", "exact_abs", "approx_abs", "sim_abs"]);
    for (i, &mu) in mus.iter().enumerate() {
        let sc = st.sc.with_pointing(mu.to_radians());
        let dt = step / sc.doppler();
        // twice the longest lag, so every lag averages over many origins
        let sim = NlosSimulator::new(&sc, &beam, n_sin, 2.0 * n as f64 * dt, dt).context("config key `n_sinusoids`")?;
        let traces = sim.ensemble(seed.wrapping_add(i as u64), n_seeds);
        let lags: Vec<usize> = (0..=n).collect();
        let est = empirical_correlation(&traces, &lags)?;
        for (j, e) in est.iter().enumerate() {
            let tau = j as f64 * dt;
            table.push(vec![
                mu,
                j as f64 * step,
                corr_nlos_exact(&sc, &beam, tau).norm(),
                corr_nlos_approx(&sc, &beam, tau).norm(),
                e.value.norm(),
            ]);
        }
    }
    st.note("mu_deg_series", series(&mus));
    st.note("sim_seed_per_series", "seed + series index");
    Ok((st.manifest, table))
}

/// `K ∈ {0, 0.2, …, 2}`.
pub fn fig4_k_values() -> Vec<f64> {
    (0..=10).map(|i| i as f64 * 0.2).collect()
}

fn fig4(cfg: &RunConfig) -> Run {
    let defaults = [("kr", 50.0), ("fd_tau_max", 60.0), ("fd_tau_step", 0.05)];
    let base = ScenarioParams {
        scatter_radius_m: 5.0,
        ..ScenarioParams::default()
    };
    let fixed = ["pointing_deg", "los_deg", "rician_k", "lobe_mean_deg", "lobe_std_deg"];
    let mut st = setup("fig4", cfg, base, &fixed, &defaults)?;
    let s = &st.settings;
    let beam = Beam::from_concentration(s.get("kr")).context("config key `kr`")?;
    let (n, step) = lag_steps(s)?;
    let mus = [10.0f64, 80.0];
    let ks = fig4_k_values();
    let mut table = Table::new(&["mu_deg", "K", "fD_tau", "abs_R"]);
    for &mu in &mus {
        for &k in &ks {
            let sc = st
                .sc
                .with_pointing(mu.to_radians())
                .with_los_angle(mu.to_radians())
                .with_rician_k(k);
            for j in 0..=n {
                let x = j as f64 * step;
                table.push(vec![mu, k, x, corr_combined(&sc, &beam, x / sc.doppler()).norm()]);
            }
        }
    }
    st.note("mu_deg_series", series(&mus));
    st.note("k_series", series(&ks));
    Ok((st.manifest, table))
}

fn fig5(cfg: &RunConfig) -> Run {
    let defaults = [("R", 0.5), ("theta_min", 1.0), ("theta_max", 30.0), ("theta_step", 0.5)];
    let fixed = [&["pointing_deg"], NLOS_ONLY].concat();
    let mut st = setup("fig5", cfg, ScenarioParams::default(), &fixed, &defaults)?;
    let r = st.settings.get("R");
    let thetas = grid(&st.settings, "theta")?;
    let mus = [1.0f64, 5.0];
    let mut table = Table::new(&["mu_deg", "theta_deg", "tc_exact", "tc_small_mu", "tc_no_angle_diff"]);
    for &mu in &mus {
        let sc = st.sc.with_pointing(mu.to_radians());
        let spec = numeric_spec(&sc, r)?;
        let rows: Vec<Result<Vec<f64>>> = thetas
            .par_iter()
            .map(|&th| {
                let b = Beam::from_degrees(th).context("config key `theta_min`")?;
                Ok(vec![
                    mu,
                    th,
                    tc_numeric(|t| corr_nlos_exact(&sc, &b, t), &spec)?,
                    or_nan(tc_small_mu(&sc, &b, r)),
                    tc_no_pointing(&sc, &b, r)?,
                ])
            })
            .collect();
        for row in rows {
            table.push(row?);
        }
    }
    st.note("mu_deg_series", series(&mus));
    Ok((st.manifest, table))
}

fn fig6(cfg: &RunConfig) -> Run {
    let defaults = [("R", 0.5), ("theta_min", 1.0), ("theta_max", 45.0), ("theta_step", 0.5)];
    let fixed = [&["pointing_deg"], NLOS_ONLY].concat();
    let mut st = setup("fig6", cfg, ScenarioParams::default(), &fixed, &defaults)?;
    let r = st.settings.get("R");
    let thetas = grid(&st.settings, "theta")?;
    let mus = [30.0f64, 45.0, 60.0, 90.0];
    let mut table = Table::new(&["mu_deg", "theta_deg", "tc_exact", "tc_general_mu", "tc_worst_case"]);
    for &mu in &mus {
        let sc = st.sc.with_pointing(mu.to_radians());
        let spec = numeric_spec(&sc, r)?;
        let rows: Vec<Result<Vec<f64>>> = thetas
            .par_iter()
            .map(|&th| {
                let b = Beam::from_degrees(th).context("config key `theta_min`")?;
                Ok(vec![
                    mu,
                    th,
                    tc_numeric(|t| corr_nlos_exact(&sc, &b, t), &spec)?,
                    or_nan(tc_general_mu(&sc, &b, r)),
                    or_nan(tc_worst_case(&sc, &b, r)),
                ])
            })
            .collect();
        for row in rows {
            table.push(row?);
        }
    }
    st.note("mu_deg_series", series(&mus));
    st.note("invalid_regime", "nan");
    Ok((st.manifest, table))
}

fn fig7(cfg: &RunConfig) -> Run {
    let defaults = [("zeta", 0.5), ("theta_min", 1.0), ("theta_max", 30.0), ("theta_step", 1.0)];
    let base = ScenarioParams {
        scatter_radius_m: 5.0,
        ..ScenarioParams::default()
    };
    let fixed = ["pointing_deg", "los_deg", "rician_k"];
    let st = setup("fig7", cfg, base, &fixed, &defaults)?;
    let zeta = st.settings.get("zeta");
    let thetas = grid(&st.settings, "theta")?;
    let at = |mu: f64| st.sc.with_pointing(mu.to_radians()).with_los_angle(mu.to_radians());
    let (s10, s80) = (at(10.0), at(80.0));
    let mut table = Table::new(&["theta_deg", "TB_los_mu10", "TB_los_mu80", "TB_nlos_mu10", "TB_nlos_mu80"]);
    for &th in &thetas {
        let b = Beam::from_degrees(th).context("config key `theta_min`")?;
        let tol = Tolerance::default();
        table.push(vec![
            th,
            or_nan(tb_los(&s10, &b, zeta)),
            or_nan(tb_los(&s80, &b, zeta)),
            tb_nlos_mean(&s10, &b, &st.lobes, zeta, tol).context("config key `zeta`")?,
            tb_nlos_mean(&s80, &b, &st.lobes, zeta, tol).context("config key `zeta`")?,
        ]);
    }
    Ok((st.manifest, table))
}

fn fig8(cfg: &RunConfig) -> Run {
    let defaults = [("theta_deg", 10.0), ("snr_data_db", 0.0), ("snr_pilot_db", 0.0)];
    let fixed = [&["pointing_deg"], NLOS_ONLY].concat();
    let mut st = setup("fig8", cfg, ScenarioParams::default(), &fixed, &defaults)?;
    let s = &st.settings;
    let beam = beam_deg(s, "theta_deg")?;
    let (snr_s, snr_v) = (db_to_linear(s.get("snr_data_db")), db_to_linear(s.get("snr_pilot_db")));
    let bandwidths = [5.0, 10.0, 20.0, 40.0];
    let mus = [0.0, 20.0, 40.0, 60.0, 80.0];
    let cases: Vec<(f64, f64)> = bandwidths
        .iter()
        .map(|&b| (b, 0.0))
        .chain(mus.iter().filter(|&&m| m != 0.0).map(|&m| (10.0, m)))
        .collect();
    let mut table = Table::new(&["bandwidth_mhz", "mu_deg", "nu", "I_low"]);
    for (bw, mu) in cases {
        let sc = st.sc.with_pointing(f64::to_radians(mu));
        let corr = |t: f64| corr_nlos_exact(&sc, &beam, t);
        for nu in default_nu_grid() {
            let link = LinkConfig::from_bandwidth(snr_s, snr_v, nu, bw * 1e6).context("config key `snr_data_db`")?;
            table.push(vec![bw, mu, nu as f64, mi_lower_bound(&beam, &link, corr)]);
        }
    }
    st.note("bandwidth_mhz_series_at_mu0", series(&bandwidths));
    st.note("mu_deg_series_at_10mhz", series(&mus));
    Ok((st.manifest, table))
}

fn realign_config(s: &Settings, delta_db: f64) -> Result<RealignConfig> {
    let levels = s.get("codebook_levels");
    let codebook_levels = if levels == 0.0 {
        None
    } else {
        Some(s.count("codebook_levels")? as u32)
    };
    let pilot = if flag(s, "pilot_coupled")? {
        PilotSnr::Coupled
    } else {
        PilotSnr::Fixed(db_to_linear(s.get("pilot_snr_db")))
    };
    let short_period = if flag(s, "short_period_numeric")? {
        ShortPeriod::Numeric
    } else {
        ShortPeriod::WorstCase
    };
    let cfg = RealignConfig {
        threshold_r: s.get("R"),
        zeta: s.get("zeta"),
        codebook_levels,
        coverage_theta0: s.positive("theta0_deg")?.to_radians(),
        train_per_beam: s.get("t_trn_us") * 1e-6,
        mean_snr_path1: db_to_linear(s.get("snr_data_db")),
        pilot,
        short_period,
        ..RealignConfig::default()
    }
    .with_delta_db(delta_db);
    cfg.validate().map_err(config_key_error)?;
    Ok(cfg)
}

fn config_key_error(e: beamcoh::Error) -> anyhow::Error {
    let key = match &e {
        beamcoh::Error::InvalidParameter { name, .. } => match *name {
            "threshold_R" => "R",
            "mean_snr_path1" => "snr_data_db",
            "train_per_beam" => "t_trn_us",
            "pilot_snr" => "pilot_snr_db",
            other => other,
        },
        _ => return e.into(),
    };
    anyhow::Error::new(e).context(format!("config key `{key}`"))
}

fn flag(s: &Settings, key: &str) -> Result<bool> {
    let v = s.get(key);
    match v {
        0.0 => Ok(false),
        1.0 => Ok(true),
        _ => bail!("config key `{key}`: must be 0 or 1, got {v}"),
    }
}

pub const FIG9_DEFAULTS: [(&str, f64); 16] = [
    ("bandwidth_mhz", 10.0),
    ("nu", 64.0),
    ("R", 0.5),
    ("zeta", 0.5),
    ("theta0_deg", 180.0),
    ("t_trn_us", 1.0),
    ("snr_data_db", 0.0),
    ("pilot_snr_db", 0.0),
    ("pilot_coupled", 0.0),
    ("codebook_levels", 2.0),
    ("short_period_numeric", 0.0),
    ("theta_min", 2.0),
    ("theta_max", 30.0),
    ("theta_step", 1.0),
    ("delta_db_low", 3.0),
    ("delta_db_high", 10.0),
];

fn fig9(cfg: &RunConfig) -> Run {
    let base = ScenarioParams {
        scatter_radius_m: 5.0,
        pointing_rad: std::f64::consts::FRAC_PI_2,
        ..ScenarioParams::default()
    };
    let fixed = ["los_deg", "rician_k"];
    let mut st = setup("fig9", cfg, base, &fixed, &FIG9_DEFAULTS)?;
    let s = &st.settings;
    let thetas = grid(s, "theta")?;
    let deltas = [s.get("delta_db_low"), s.get("delta_db_high")];
    let nu = s.count("nu")?;
    let snr = db_to_linear(s.get("snr_data_db"));
    let link = LinkConfig::from_bandwidth(snr, snr, nu, s.positive("bandwidth_mhz")? * 1e6).context("config key `nu`")?;
    let mut table = Table::new(&["delta_db", "theta_deg", "C_short", "C_long", "T_short", "T_long", "T_sweep"]);
    for &d in &deltas {
        let rc = realign_config(s, d)?;
        let rows: Vec<Result<Vec<f64>>> = thetas
            .par_iter()
            .map(|&th| {
                let b = Beam::from_degrees(th).context("config key `theta_min`")?;
                let c = compare_policies(&st.sc, &b, &st.lobes, &link, &rc)
                    .with_context(|| format!("theta = {th} deg"))?;
                Ok(vec![d, th, c.c_short, c.c_long, c.period_short, c.period_long, c.overhead])
            })
            .collect();
        for row in rows {
            table.push(row?);
        }
    }
    st.note("delta_db_series", series(&deltas));
    st.note("units", "C in nats/symbol, times in s");
    Ok((st.manifest, table))
}

fn custom(cfg: &RunConfig) -> Run {
    let defaults = [
        ("theta_deg", 10.0),
        ("R", 0.5),
        ("zeta", 0.5),
        ("fd_tau_max", 1.0),
        ("fd_tau_step", 0.01),
    ];
    let mut st = setup("custom", cfg, ScenarioParams::default(), &[], &defaults)?;
    let s = &st.settings;
    let beam = beam_deg(s, "theta_deg")?;
    let (r, zeta) = (s.get("R"), s.get("zeta"));
    let (n, step) = lag_steps(s)?;
    let sc = st.sc;
    let mut table = Table::new(&["fD_tau", "exact_re", "exact_im", "approx_re", "approx_im", "combined_abs"]);
    for j in 0..=n {
        let x = j as f64 * step;
        let tau = x / sc.doppler();
        let e = corr_nlos_exact(&sc, &beam, tau);
        let a = corr_nlos_approx(&sc, &beam, tau);
        table.push(vec![x, e.re, e.im, a.re, a.im, corr_combined(&sc, &beam, tau).norm()]);
    }
    let show = |v: beamcoh::Result<f64>| match v {
        Ok(x) => x.to_string(),
        Err(e) => format!("n/a ({e})"),
    };
    let spec = numeric_spec(&sc, r)?;
    let summary = [
        ("tc_numeric_s", show(tc_numeric(|t| corr_nlos_exact(&sc, &beam, t), &spec))),
        ("tc_small_mu_s", show(tc_small_mu(&sc, &beam, r))),
        ("tc_general_mu_s", show(tc_general_mu(&sc, &beam, r))),
        ("tc_worst_case_s", show(tc_worst_case(&sc, &beam, r))),
        ("tc_los_s", show(tc_los(&sc, &beam, r))),
        ("tb_los_s", show(tb_los(&sc, &beam, zeta))),
        (
            "tb_nlos_mean_s",
            show(tb_nlos_mean(&sc, &beam, &st.lobes, zeta, Tolerance::default())),
        ),
        ("antenna_gain_db", linear_to_db(antenna_gain(&beam)).to_string()),
    ];
    for (k, v) in summary {
        st.note(k, v);
    }
    Ok((st.manifest, table))
}
