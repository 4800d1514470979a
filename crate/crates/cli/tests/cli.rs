use std::fs;
use std::process::Command;

use beamcoh_cli::config::RunConfig;
use beamcoh_cli::{compute, run_experiment, Experiment, ExperimentSpec};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_beamcoh"))
}

fn calc(args: &[&str]) -> String {
    let mut out = Vec::new();
    beamcoh_cli::run(std::iter::once("beamcoh").chain(args.iter().copied()), &mut out).unwrap();
    String::from_utf8(out).unwrap()
}

#[test]
fn calc_golden_strings() {
    assert_eq!(
        calc(&["calc", "coherence", "--theta-deg", "10", "--R", "0.5", "--no-pointing"]),
        "Tc = 3.373 ms\n"
    );
    assert_eq!(calc(&["calc", "gain", "--theta-deg", "10"]), "Gain = 11.56 dB (14.31 linear)\n");
    assert_eq!(
        calc(&["calc", "beam-coherence", "--mode", "los", "--theta-rad", "0.1", "--mu-deg", "10"]),
        "TB = 1.131 s\n"
    );
}

#[test]
fn mi_sweep_reports_best_spacing() {
    let text = calc(&["calc", "mi-bound", "--theta-deg", "10", "--sweep"]);
    assert!(text.starts_with("nu,I_low_nats\n"));
    assert!(text.trim_end().ends_with("best nu = 128"), "{text}");
}

#[test]
fn same_seed_gives_identical_csv() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.txt");
    fs::write(&cfg, "n_sinusoids = 200\nn_seeds = 4\nfd_tau_max = 0.1\n").unwrap();
    let run = |name: &str, seed: u64| {
        let spec = ExperimentSpec {
            experiment: Experiment::Fig3,
            config_path: Some(cfg.clone()),
            output_path: dir.path().join(name),
            seed,
        };
        run_experiment(&spec).unwrap();
        fs::read(&spec.output_path).unwrap()
    };
    let a = run("a.csv", 7);
    let b = run("b.csv", 7);
    let c = run("c.csv", 8);
    assert_eq!(a, b);
    assert_ne!(a, c);
    assert!(dir.path().join("a.manifest.json").exists());
}

#[test]
fn binary_writes_csv_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("fig5.csv");
    let status = bin()
        .args(["run", "--experiment", "fig5", "--out"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let csv = fs::read_to_string(&out).unwrap();
    assert!(csv.starts_with("# experiment"));
    assert!(csv.contains("mu_deg,theta_deg,tc_exact,tc_small_mu,tc_no_angle_diff"));
    let manifest: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("fig5.manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["experiment"], "fig5");
    assert_eq!(manifest["columns"].as_array().unwrap().len(), 5);
}

#[test]
fn unknown_experiment_is_rejected() {
    let o = bin().args(["run", "--experiment", "fig10", "--out", "x.csv"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown experiment `fig10`"));
}

fn config_error(exp: Experiment, text: &str) -> String {
    let cfg = RunConfig::parse(text).unwrap();
    format!("{:#}", compute(exp, &cfg, 0).unwrap_err())
}

#[test]
fn config_errors_name_the_key() {
    assert!(config_error(Experiment::Fig5, "nu = 3").contains("`nu`"));
    assert!(config_error(Experiment::Fig4, "pointing_deg = 30").contains("`pointing_deg`"));
    assert!(config_error(Experiment::Fig3, "fd_tau_step = 0.03").contains("fd_tau"));
    assert!(config_error(Experiment::Fig9, "pilot_coupled = 2").contains("`pilot_coupled`"));
    let err = format!("{:#}", RunConfig::parse("speed_mps = fast").unwrap_err());
    assert!(err.contains("`speed_mps`"), "{err}");
}

#[test]
fn binary_reports_bad_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.cfg");
    fs::write(&cfg, "theta_min = -1\n").unwrap();
    let o = bin()
        .args(["run", "--experiment", "fig6", "--config"])
        .arg(&cfg)
        .arg("--out")
        .arg(dir.path().join("o.csv"))
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.starts_with("error: ") && err.contains("theta_min"), "{err}");
}
