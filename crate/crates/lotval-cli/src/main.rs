//! `lotval` — lot sizing and inventory policy valuation from the command
//! line.
//!
//! Every subcommand reads the model from a `key = value` config file (see
//! [`config`]) and writes its result to stdout. Errors go to stderr only:
//! exit code 2 flags bad input (unreadable config, invalid parameters,
//! malformed ranges), exit code 1 an internal failure. Output is fully
//! determined by the inputs — two runs with the same config and flags
//! produce byte-identical output.

mod config;
mod render;

use clap::{Parser, Subcommand, ValueEnum};
use config::{parse_config, ModelConfig};
use lotval::{oracle, valuation, Rounding};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "lotval",
    version,
    about = "Classical and value-based lot sizing with firm-value pricing of policy changes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the cost-minimizing lot size (EOQ or POQ)
    Classical {
        /// Model configuration file
        #[arg(long, value_name = "PATH")]
        config: PathBuf,
    },
    /// Print the firm-value-maximizing lot size (VBEOQ or VBPOQ)
    ValueBased {
        #[arg(long, value_name = "PATH")]
        config: PathBuf,
    },
    /// Show cost, inventory value, and value-adjusted cost for one lot size
    Evaluate {
        #[arg(long, value_name = "PATH")]
        config: PathBuf,
        /// Lot size to evaluate
        #[arg(long)]
        q: u64,
        /// Round costs to whole currency units and the inventory valuation
        /// to a whole-unit average stock, as printed ledgers do
        #[arg(long)]
        paper_rounding: bool,
    },
    /// Price a switch between two lot sizes as cost, value, and EVA deltas
    Compare {
        #[arg(long, value_name = "PATH")]
        config: PathBuf,
        /// Lot size of the policy currently in place
        #[arg(long)]
        baseline_q: u64,
        /// Lot size of the proposed policy
        #[arg(long)]
        alt_q: u64,
        #[arg(long)]
        paper_rounding: bool,
    },
    /// Tabulate a range of lot sizes against a baseline policy
    Sweep {
        #[arg(long, value_name = "PATH")]
        config: PathBuf,
        /// First lot size of the range (inclusive)
        #[arg(long)]
        from: u64,
        /// Last lot size of the range (inclusive)
        #[arg(long)]
        to: u64,
        /// Baseline lot size; defaults to the classical optimum rounded to
        /// the nearest whole unit
        #[arg(long)]
        baseline_q: Option<u64>,
        #[arg(long)]
        paper_rounding: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Scan whole-number lot sizes exhaustively for the lowest
    /// value-adjusted cost
    Scan {
        #[arg(long, value_name = "PATH")]
        config: PathBuf,
        /// First lot size to scan (requires --to); the default range runs
        /// from 1 to ten times the classical optimum
        #[arg(long)]
        from: Option<u64>,
        /// Last lot size to scan (requires --from)
        #[arg(long)]
        to: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Csv,
}

enum AppError {
    /// Bad input: config, flags, or parameters. Exit code 2.
    Usage(String),
    /// Unexpected internal failure. Exit code 1.
    Internal(String),
}

impl From<config::ConfigError> for AppError {
    fn from(err: config::ConfigError) -> Self {
        AppError::Usage(err.to_string())
    }
}

impl From<lotval::Error> for AppError {
    fn from(err: lotval::Error) -> Self {
        AppError::Usage(err.to_string())
    }
}

fn load_config(path: &Path) -> Result<ModelConfig, AppError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError::Usage(format!("cannot read `{}`: {e}", path.display())))?;
    parse_config(&text).map_err(AppError::from)
}

fn rounding(paper: bool) -> Rounding {
    if paper {
        Rounding::WholeUnits
    } else {
        Rounding::Exact
    }
}

fn run(cli: Cli) -> Result<String, AppError> {
    match cli.command {
        Command::Classical { config } => {
            let cfg = load_config(&config)?;
            let q = cfg.model.classical_quantity()?;
            Ok(render::optimum(q, &cfg, false))
        }
        Command::ValueBased { config } => {
            let cfg = load_config(&config)?;
            let q = cfg.model.value_based_quantity(&cfg.financial)?;
            Ok(render::optimum(q, &cfg, true))
        }
        Command::Evaluate {
            config,
            q,
            paper_rounding,
        } => {
            let cfg = load_config(&config)?;
            let eval = cfg
                .model
                .evaluate(&cfg.financial, q as f64, rounding(paper_rounding))?;
            Ok(render::evaluation(&eval, &cfg))
        }
        Command::Compare {
            config,
            baseline_q,
            alt_q,
            paper_rounding,
        } => {
            let cfg = load_config(&config)?;
            let delta = valuation::compare_policies(
                &cfg.model,
                &cfg.financial,
                baseline_q as f64,
                alt_q as f64,
                rounding(paper_rounding),
            )?;
            Ok(render::comparison(
                &delta,
                baseline_q as f64,
                alt_q as f64,
                &cfg,
            ))
        }
        Command::Sweep {
            config,
            from,
            to,
            baseline_q,
            paper_rounding,
            format,
        } => {
            let cfg = load_config(&config)?;
            let baseline = match baseline_q {
                Some(q) => q as f64,
                None => cfg.model.classical_quantity()?.round(),
            };
            let rows = oracle::sweep(
                &cfg.model,
                &cfg.financial,
                baseline,
                from,
                to,
                rounding(paper_rounding),
            )?;
            Ok(match format {
                Format::Table => render::sweep_table(&rows),
                Format::Csv => render::sweep_csv(&rows),
            })
        }
        Command::Scan { config, from, to } => {
            let cfg = load_config(&config)?;
            let range = match (from, to) {
                (Some(lo), Some(hi)) => Some((lo, hi)),
                (None, None) => None,
                _ => {
                    return Err(AppError::Usage(
                        "--from and --to must be given together".to_string(),
                    ))
                }
            };
            let result = oracle::minimize_value_cost(&cfg.model, &cfg.financial, range)?;
            Ok(render::scan(&result, &cfg))
        }
    }
}

fn main() -> ExitCode {
    let outcome = run(Cli::parse()).and_then(|output| {
        std::io::stdout()
            .write_all(output.as_bytes())
            .map_err(|e| AppError::Internal(format!("cannot write to stdout: {e}")))
    });
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(AppError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(AppError::Internal(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
