//! Command-line front end. [`run`] parses arguments, dispatches and writes a
//! [`Report`]; it returns the process exit code:
//! 0 success, 2 input error, 3 precondition error, 4 verification failure.

mod commands;
pub mod io;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::exponent::Exponent;

pub use report::Report;

pub const THREADS_ENV: &str = "MONOTONE_NORM_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "monotone-norm",
    version,
    about = "Operator norms of non-negative matrices on decreasing inputs"
)]
pub struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute ||A||_{p,q}, optionally with the decreasing-input norm.
    Norm(NormArgs),
    /// Decide an attainment condition and report its witness.
    Check(CheckArgs),
    /// Build the explicit norm-attaining decreasing input.
    Extremal(ExtremalArgs),
    /// Run the numerical oracle.
    Oracle(OracleArgs),
    /// Materialize a named matrix and check its claims.
    Gallery(GalleryArgs),
    /// Random trials of a condition / norm-equality equivalence.
    VerifyTheorem(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct MatrixArg {
    /// Matrix file (.csv or .json).
    #[arg(short = 'm', long = "matrix")]
    pub matrix: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Closed,
    Oracle,
}

#[derive(Debug, Args)]
pub struct OracleFlags {
    #[arg(long, default_value_t = 64)]
    pub restarts: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Absolute tolerance for oracle comparisons.
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Args)]
pub struct NormArgs {
    #[command(flatten)]
    pub matrix: MatrixArg,
    #[arg(short = 'p')]
    pub p: Exponent,
    #[arg(short = 'q')]
    pub q: Exponent,
    /// Also compute the norm over non-negative non-increasing inputs.
    #[arg(long)]
    pub downward: bool,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,
    /// Cross-check the closed form against the oracle.
    #[arg(long)]
    pub verify: bool,
    #[command(flatten)]
    pub oracle: OracleFlags,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub matrix: MatrixArg,
    /// One of 2.1, 3.1, 3.6, 3.7.
    #[arg(short = 'c', long = "condition")]
    pub condition: String,
    #[arg(short = 'p')]
    pub p: Option<Exponent>,
    #[arg(short = 'q')]
    pub q: Option<Exponent>,
    /// Row set, one-based, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub lambda: Vec<usize>,
    /// Try every singleton among the rows of largest norm.
    #[arg(long)]
    pub search_lambda: bool,
    /// Relative tolerance for equality with a supremum.
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Args)]
pub struct ExtremalArgs {
    #[command(flatten)]
    pub matrix: MatrixArg,
    #[arg(short = 'p')]
    pub p: Exponent,
    #[arg(short = 'q')]
    pub q: Exponent,
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub matrix: MatrixArg,
    #[arg(short = 'p')]
    pub p: Exponent,
    #[arg(short = 'q')]
    pub q: Exponent,
    #[arg(long)]
    pub downward: bool,
    #[command(flatten)]
    pub oracle: OracleFlags,
}

#[derive(Debug, Args)]
pub struct GalleryArgs {
    /// cesaro, pi26, harmonic or atom22.
    pub name: String,
    #[arg(long, default_value_t = 100)]
    pub size: usize,
    #[arg(short = 'p')]
    pub p: Option<Exponent>,
    #[arg(short = 'q')]
    pub q: Option<Exponent>,
    /// Also write the matrix here (.csv or .json).
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// One of 2.1, 2.2, 3.1, 3.2.
    #[arg(long)]
    pub which: String,
    #[arg(long, default_value_t = 200)]
    pub trials: usize,
    #[arg(long, default_value_t = 6)]
    pub size: usize,
    #[arg(short = 'p', default_value = "2")]
    pub p: Exponent,
    #[arg(short = 'q', default_value = "2")]
    pub q: Exponent,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Relative tolerance for the condition checks.
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Input(String),
    Precondition(String),
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Verification(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Precondition(m) | CliError::Verification(m) => m,
        }
    }
}

fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v.trim().parse().ok().filter(|n| *n > 0).ok_or_else(|| {
            CliError::Input(format!(
                "{THREADS_ENV} must be a positive integer, got `{v}`"
            ))
        })?;
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| CliError::Input(e.to_string()))
}

/// Parses `args` (including the program name), runs the command and writes
/// the report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{}", e.render())
            } else {
                write!(err, "{}", e.render())
            };
            return code;
        }
    };
    let result = thread_pool().and_then(|pool| pool.install(|| commands::dispatch(&cli.command)));
    let (report, failure) = match result {
        Ok(outcome) => outcome,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            return e.exit_code();
        }
    };
    if let Err(e) = report.write(out, cli.json) {
        let _ = writeln!(err, "error: {e}");
        return 2;
    }
    match failure {
        Some(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.exit_code()
        }
        None => 0,
    }
}
