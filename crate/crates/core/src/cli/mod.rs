//! Command-line front end. Every command validates its configuration, then
//! computes into an in-memory CSV document which is written in one piece.

mod commands;
mod csv_doc;

use std::path::PathBuf;

use clap::{ArgAction, Args, Parser, Subcommand};

use crate::error::HahnError;
use crate::expansion::IntervalMap;
use crate::functions::TestFunction;
use crate::params::HahnParams;

pub use commands::{compare_legendre, odd_tail_excess, run_command, Output};
pub use csv_doc::{num, CsvDoc};

pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_VIOLATION: i32 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Numeric(#[from] HahnError),
    #[error("invariant violated: {0}")]
    Violation(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Config(_) => EXIT_CONFIG,
            Self::Numeric(_) => EXIT_DOMAIN,
            Self::Violation(_) => EXIT_VIOLATION,
            Self::Io(_) | Self::Csv(_) => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "hahn", version, about = "Hahn polynomial projections, decay bounds and Runge experiments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Weight table omega(0..=N)
    Weights,
    /// Hahn polynomials of degree 0..=m at sample points
    Eval,
    /// Expansion coefficients (and optionally pointwise error)
    Project,
    /// Coefficient decay against the smoothness bound
    Decay,
    /// Off-grid behaviour of the projection, Runge phenomenon at m = N
    Runge,
    /// Hahn coefficients next to truncated Legendre coefficients
    CompareLegendre,
    /// Run the invariant suite and print a pass/fail table
    Verify,
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    #[arg(long, global = true, default_value_t = 0.0, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long, global = true, default_value_t = 0.0, allow_hyphen_values = true)]
    pub beta: f64,
    /// Largest grid index; the grid has N+1 points
    #[arg(long = "N", global = true, default_value_t = 30)]
    pub n_max: usize,
    /// Truncation degree (default 10, or N for `runge`)
    #[arg(long, global = true)]
    pub m: Option<usize>,
    /// Smoothness orders for `decay`
    #[arg(long, global = true, value_delimiter = ',', default_value = "1,2,3")]
    pub k: Vec<u32>,
    /// sin-pi | runge | poly:<c0,c1,...>
    #[arg(long = "fn", global = true)]
    pub function: Option<String>,
    /// Target interval a,b
    #[arg(long, global = true, default_value = "-1,1", allow_hyphen_values = true)]
    pub interval: String,
    /// Off-grid sample count
    #[arg(long, global = true, default_value_t = 301)]
    pub samples: usize,
    /// Parameter sets a,b[;a,b...]; overrides --alpha/--beta
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub params: Option<String>,
    /// Report coefficients against the unit-norm basis
    #[arg(long, global = true, default_value_t = true, action = ArgAction::Set)]
    pub normalized: bool,
    /// Also emit pointwise values for `project`
    #[arg(long, global = true)]
    pub pointwise: bool,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Write a gnuplot script stub for the output
    #[arg(long = "plot-script", global = true)]
    pub plot_script: Option<PathBuf>,
}

/// A validated invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub sets: Vec<HahnParams>,
    pub m: usize,
    pub ks: Vec<u32>,
    pub function: TestFunction,
    pub interval: IntervalMap,
    pub samples: usize,
    pub normalized: bool,
    pub pointwise: bool,
    pub out: Option<PathBuf>,
    pub plot_script: Option<PathBuf>,
}

fn parse_pair(s: &str, what: &str) -> Result<(f64, f64), CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [a, b] => {
            let a = a.parse::<f64>().map_err(|_| CliError::Config(format!("{what}: cannot parse '{a}'")))?;
            let b = b.parse::<f64>().map_err(|_| CliError::Config(format!("{what}: cannot parse '{b}'")))?;
            Ok((a, b))
        }
        _ => Err(CliError::Config(format!("{what}: expected 'a,b', got '{s}'"))),
    }
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        let o = &cli.opts;
        let pairs = match &o.params {
            Some(list) => list
                .split(';')
                .filter(|s| !s.trim().is_empty())
                .map(|s| parse_pair(s, "--params"))
                .collect::<Result<Vec<_>, _>>()?,
            None => vec![(o.alpha, o.beta)],
        };
        if pairs.is_empty() {
            return Err(CliError::Config("--params: no parameter sets given".into()));
        }
        let sets = pairs
            .into_iter()
            .map(|(a, b)| {
                HahnParams::new(a, b, o.n_max).map_err(|e| CliError::Config(format!("--alpha/--beta/--N: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;

        let m = o.m.unwrap_or(if cli.command == Command::Runge { o.n_max } else { 10.min(o.n_max) });
        if m > o.n_max {
            return Err(CliError::Config(format!("--m: degree {m} exceeds N = {}", o.n_max)));
        }
        if cli.command == Command::Decay && (o.k.is_empty() || o.k.iter().any(|&k| k > 8)) {
            return Err(CliError::Config("--k: expected orders in 0..=8".into()));
        }
        let default_fn = if cli.command == Command::Runge { "runge" } else { "sin-pi" };
        let function = o
            .function
            .as_deref()
            .unwrap_or(default_fn)
            .parse::<TestFunction>()
            .map_err(|e| CliError::Config(format!("--fn: {e}")))?;
        let (a, b) = parse_pair(&o.interval, "--interval")?;
        let interval = IntervalMap::new(a, b, o.n_max).map_err(|e| CliError::Config(format!("--interval: {e}")))?;
        if o.samples < 2 {
            return Err(CliError::Config("--samples: need at least 2".into()));
        }
        Ok(Self {
            command: cli.command,
            sets,
            m,
            ks: o.k.clone(),
            function,
            interval,
            samples: o.samples,
            normalized: o.normalized,
            pointwise: o.pointwise,
            out: o.out.clone(),
            plot_script: o.plot_script.clone(),
        })
    }
}

/// Parses, validates, computes and writes. Returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = RunConfig::from_cli(&cli).and_then(|cfg| {
        let output = run_command(&cfg)?;
        output.write(&cfg)?;
        Ok(output)
    });
    match result {
        Ok(output) => {
            for w in &output.warnings {
                eprintln!("warning: {w}");
            }
            match output.violation {
                Some(msg) => {
                    eprintln!("error: {}", CliError::Violation(msg));
                    EXIT_VIOLATION
                }
                None => 0,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
