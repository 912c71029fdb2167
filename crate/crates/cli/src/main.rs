use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use spinorcheck::bstower::{GammaConvention, PairingTable};
use spinorcheck::report::{self, ReportEnvelope, DEFAULT_PRIME, DEFAULT_SEED, DEFAULT_TRIALS};
use spinorcheck::spinor;

/// Verification reports for the Bott–Samelson tower of the spinor variety
/// OG(5,10) and its finite-field geometry.
#[derive(Parser)]
#[command(name = "spinorcheck", version)]
struct Cli {
    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Convention {
    Prefix,
    Suffix,
}

impl From<Convention> for GammaConvention {
    fn from(c: Convention) -> Self {
        match c {
            Convention::Prefix => GammaConvention::Prefix,
            Convention::Suffix => GammaConvention::Suffix,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute the 10x10 pairing table and compare it with the golden copy.
    Table {
        #[arg(long, value_enum, default_value = "prefix")]
        gamma_convention: Convention,
        /// JSON file (array of 10 arrays) replacing the embedded golden table.
        #[arg(long)]
        golden_table: Option<PathBuf>,
    },
    /// Enumerate lifted classes by degree and report the dimension maxima.
    Classes {
        #[arg(long, default_value_t = 3)]
        degree_min: i64,
        #[arg(long, default_value_t = 12)]
        degree_max: i64,
    },
    /// Finite-geometry census (prime 2 or 3) or Monte Carlo lift checks.
    Geom {
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        prime: u64,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Run every acceptance suite.
    VerifyAll {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// JSON file (array of 10 arrays) replacing the embedded golden table.
        #[arg(long)]
        golden_table: Option<PathBuf>,
    },
}

/// Failures attributable to the invocation rather than to a check.
struct UsageError(anyhow::Error);

fn load_golden(path: Option<&Path>) -> Result<PairingTable> {
    let Some(path) = path else {
        return Ok(spinor::reference_table());
    };
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn run(cli: &Cli) -> Result<ReportEnvelope, UsageError> {
    let usage = |e: anyhow::Error| UsageError(e);
    Ok(match &cli.command {
        Command::Table { gamma_convention, golden_table } => {
            let golden = load_golden(golden_table.as_deref()).map_err(usage)?;
            report::table_report((*gamma_convention).into(), &golden)
        }
        Command::Classes { degree_min, degree_max } => {
            report::classes_report(*degree_min, *degree_max).map_err(|e| usage(e.into()))?
        }
        Command::Geom { prime, trials, seed } => {
            report::geom_report(*prime, *trials, *seed).map_err(|e| usage(e.into()))?
        }
        Command::VerifyAll { seed, golden_table } => {
            let golden = load_golden(golden_table.as_deref()).map_err(usage)?;
            report::verify_all(*seed, &golden)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(UsageError(e)) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    if cli.json {
        println!("{}", report.to_json());
    } else {
        for line in &report.text {
            println!("{line}");
        }
        let failed: Vec<_> = report.summary.checks.iter().filter(|c| !c.passed).collect();
        if failed.is_empty() {
            println!("all {} checks passed", report.summary.checks.len());
        } else {
            for c in &failed {
                println!("FAILED {}: {}", c.name, c.detail);
            }
            println!("{} of {} checks failed", failed.len(), report.summary.checks.len());
        }
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
