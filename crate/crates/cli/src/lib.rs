//! Command-line front end for `beamcoh`: figure experiments written as CSV
//! and small calculators.

pub mod calc;
pub mod config;
pub mod experiments;
pub mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use anyhow::Result;
use clap::{Parser, Subcommand};

pub use experiments::{compute, run_experiment, Experiment, ExperimentSpec};
pub use output::{RunOutput, Table};

#[derive(Debug, Parser)]
#[command(name = "beamcoh", version, about = "Channel and beam coherence for moving directional links")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a figure experiment and write CSV plus a JSON manifest.
    Run {
        /// fig3 … fig9 or custom.
        #[arg(long)]
        experiment: Experiment,
        /// Optional `key = value` overrides.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Output CSV path; the manifest goes next to it.
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Evaluate a single quantity.
    #[command(subcommand)]
    Calc(CalcCommand),
}

#[derive(Debug, Subcommand)]
pub enum CalcCommand {
    /// Channel coherence time.
    Coherence(calc::CoherenceArgs),
    /// Beam coherence time.
    BeamCoherence(calc::BeamCoherenceArgs),
    /// Peak antenna gain of the von Mises beam.
    Gain(calc::GainArgs),
    /// Estimation-aware mutual-information lower bound.
    MiBound(calc::MiBoundArgs),
}

/// Parses `args` (program name first) and runs the command, writing
/// human-readable output to `out`.
pub fn run<I, T, W>(args: I, out: &mut W) -> Result<()>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
{
    let cli = Cli::try_parse_from(args)?;
    execute(cli.command, out)
}

pub fn execute<W: Write>(command: Command, out: &mut W) -> Result<()> {
    match command {
        Command::Run {
            experiment,
            config,
            out: path,
            seed,
        } => {
            let spec = ExperimentSpec {
                experiment,
                config_path: config,
                output_path: path,
                seed,
            };
            let result = run_experiment(&spec)?;
            writeln!(
                out,
                "{}: {} rows -> {} (manifest {})",
                result.experiment,
                result.table.rows.len(),
                spec.output_path.display(),
                experiments::manifest_path(&spec.output_path).display()
            )?;
        }
        Command::Calc(c) => {
            let text = match c {
                CalcCommand::Coherence(a) => calc::coherence(&a)?,
                CalcCommand::BeamCoherence(a) => calc::beam_coherence(&a)?,
                CalcCommand::Gain(a) => calc::gain(&a)?,
                CalcCommand::MiBound(a) => calc::mi_bound(&a)?,
            };
            out.write_all(text.as_bytes())?;
        }
    }
    Ok(())
}
