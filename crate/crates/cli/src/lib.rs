//! Command-line harness for the Drazin inverse library: compute Drazin
//! inverses of matrices read from files, run seeded identity campaigns,
//! compare the engines with brute-force search, and replay the two
//! counterexamples for the sum formula.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check
//! fails or the input has no Drazin inverse, 2 on usage or input errors.

pub mod counterexample;
pub mod drazin_cmd;
pub mod oracle;
pub mod report;
pub mod theorem;
pub mod verify;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use drazin_core::calculus::CalculusError;
use drazin_core::{Domain, DrazinError, MatrixError};
use thiserror::Error;

use crate::report::to_json;
use crate::theorem::TheoremId;
use crate::verify::{VerifyPlan, DEFAULT_DIMS, DEFAULT_DOMAINS, DEFAULT_TRIALS};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("cannot read {path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error(transparent)]
    Drazin(#[from] DrazinError),
    #[error(transparent)]
    Calculus(#[from] CalculusError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Drazin(DrazinError::ValidationFailed(_)) | CliError::Calculus(_) | CliError::Internal(_) => {
                EXIT_FAIL
            }
            _ => EXIT_USAGE,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "drazin-idem", version, about = "Exact Drazin inverses and idempotent identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a^D, the index and a^pi for the matrix in FILE.
    Drazin { file: PathBuf },
    /// Run seeded identity campaigns and print a JSON report.
    Verify(VerifyArgs),
    /// Compare the engine with brute-force search over a whole ring.
    Oracle(OracleArgs),
    /// Replay the two counterexamples for the sum formula.
    Counterexample,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Theorem id, e.g. T3.5 or L2.4.
    #[arg(long, required_unless_present = "all", conflicts_with = "all")]
    pub theorem: Option<TheoremId>,
    /// Every theorem.
    #[arg(long)]
    pub all: bool,
    /// Q or GF:<p>; defaults to GF:2, GF:3, GF:7, GF:13 and Q.
    #[arg(long)]
    pub domain: Option<Domain>,
    /// Matrix dimension; defaults to 1 through 5.
    #[arg(long)]
    pub dim: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub domain: Domain,
    #[arg(long)]
    pub dim: usize,
    /// Enumerate the whole ring (the only mode).
    #[arg(long, required = true)]
    pub exhaustive: bool,
}

/// Text for standard output and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn new(stdout: String, pass: bool) -> Self {
        Outcome { stdout, code: if pass { EXIT_PASS } else { EXIT_FAIL } }
    }
}

impl VerifyArgs {
    pub fn plan(&self) -> VerifyPlan {
        VerifyPlan {
            theorems: match self.theorem {
                Some(t) => vec![t],
                None => TheoremId::ALL.to_vec(),
            },
            domains: self.domain.map_or_else(|| DEFAULT_DOMAINS.to_vec(), |d| vec![d]),
            dims: self.dim.map_or_else(|| DEFAULT_DIMS.to_vec(), |n| vec![n]),
            trials: self.trials,
            seed: self.seed,
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Drazin { file } => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| CliError::Io { path: file.clone(), message: e.to_string() })?;
            Ok(match drazin_cmd::run_drazin(&text)? {
                Some(out) => Outcome::new(out, true),
                None => Outcome::new("NotDrazinInvertible\n".into(), false),
            })
        }
        Command::Verify(args) => {
            let campaign = verify::run_campaign(&args.plan())?;
            Ok(Outcome::new(to_json(&campaign), campaign.pass))
        }
        Command::Oracle(args) => {
            let report = oracle::run_oracle(args.domain, args.dim)?;
            Ok(Outcome::new(to_json(&report), report.pass))
        }
        Command::Counterexample => {
            let report = counterexample::run_counterexamples()?;
            Ok(Outcome::new(to_json(&report), report.pass))
        }
    }
}
