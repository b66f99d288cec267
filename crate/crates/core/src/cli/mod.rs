//! Command-line front end.
//!
//! Every subcommand produces one document, written as JSON or CSV to
//! standard output or to `--output`. A relative `--output` path is
//! resolved against `$ZEROENERGY_OUTPUT_DIR` when that variable is set.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid arguments,
//! 3 I/O failure.

mod commands;
mod figures;
mod output;
pub mod verify;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::param::Real;
pub use output::{Document, Table};

pub const OUTPUT_DIR_ENV: &str = "ZEROENERGY_OUTPUT_DIR";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "zeroenergy",
    version,
    about = "Exact zero-energy states of two-term power-law potentials"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the document here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Specfn,
    Oscillator,
    Powerlaw,
    Dirac,
    Bender,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Specfn,
        Suite::Oscillator,
        Suite::Powerlaw,
        Suite::Dirac,
        Suite::Bender,
        Suite::Oracle,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Specfn => "specfn",
            Suite::Oscillator => "oscillator",
            Suite::Powerlaw => "powerlaw",
            Suite::Dirac => "dirac",
            Suite::Bender => "bender",
            Suite::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run residual and agreement checks; exits 1 if any fails.
    Verify(VerifyArgs),
    /// Limits, boundedness and normalizability of one state.
    Classify(ClassifyArgs),
    /// All (l, n) pairs sharing the potential of level omega.
    Degeneracy(DegeneracyArgs),
    /// Potential, effective potential and wavefunction on a radial grid.
    Potential(PotentialArgs),
    /// The rest-mass Dirac solution for one (beta, l).
    Dirac(DiracArgs),
    /// Energies and eigenfunction checks of the half-line problem.
    Bender(BenderArgs),
    /// Recover the attractive couplings by shooting.
    Oracle(OracleArgs),
    /// Curve data for the exponent and effective-potential figures.
    Figures(FiguresArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum, required_unless_present = "all", conflicts_with = "all")]
    pub suite: Option<Suite>,

    /// Run every suite.
    #[arg(long)]
    pub all: bool,

    #[arg(long, default_value_t = 1e-8)]
    pub residual_tol: f64,

    #[arg(long, default_value_t = 1e-6)]
    pub oracle_tol: f64,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Real,

    #[arg(long)]
    pub l: u32,

    #[arg(long, conflicts_with = "level")]
    pub n: Option<u32>,

    /// Real value replacing n in the attractive coupling.
    #[arg(long, allow_hyphen_values = true)]
    pub level: Option<f64>,

    #[arg(long, default_value_t = 1.0)]
    pub lambda: f64,
}

#[derive(Debug, Args)]
pub struct DegeneracyArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Real,

    #[arg(long)]
    pub omega: Real,

    #[arg(long)]
    pub l_max: Option<u32>,
}

#[derive(Debug, Args)]
pub struct PotentialArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Real,

    #[arg(long, default_value_t = 1.0)]
    pub lambda: f64,

    #[arg(long, default_value_t = 0)]
    pub l: u32,

    #[arg(long, default_value_t = 0)]
    pub n: u32,

    #[arg(long)]
    pub r_min: Option<f64>,

    #[arg(long)]
    pub r_max: Option<f64>,

    #[arg(long, default_value_t = 200)]
    pub points: usize,
}

#[derive(Debug, Args)]
pub struct DiracArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Real,

    #[arg(long, default_value_t = 1.0)]
    pub lambda: f64,

    #[arg(long, default_value_t = 0)]
    pub l: u32,

    #[arg(long, default_value_t = crate::dirac::FINE_STRUCTURE)]
    pub alpha: f64,
}

#[derive(Debug, Args)]
pub struct BenderArgs {
    #[arg(long = "N", allow_hyphen_values = true)]
    pub big_n: i64,

    #[arg(long, conflicts_with = "count")]
    pub n: Option<u32>,

    /// Report levels 0..count.
    #[arg(long)]
    pub count: Option<u32>,

    /// Also recover the energies by shooting (N >= -1, count <= 4).
    #[arg(long)]
    pub shoot: bool,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Real,

    #[arg(long, default_value_t = 1.0)]
    pub lambda: f64,

    #[arg(long)]
    pub l: u32,

    #[arg(long, default_value_t = 3)]
    pub count: usize,

    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct FiguresArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    pub which: u8,

    /// `start:stop:step` for figure 1.
    #[arg(long, allow_hyphen_values = true, default_value = "-4:4:0.01")]
    pub mu_range: String,

    /// Override the figure's default mu (must lie in the figure's regime).
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<Real>,

    #[arg(long, default_value_t = 1.0)]
    pub lambda: f64,

    /// Angular momentum for the l > 0 curves.
    #[arg(long, default_value_t = 1)]
    pub l: u32,

    /// State index for the bounded l > 0 curve.
    #[arg(long, default_value_t = 0)]
    pub n: u32,

    #[arg(long, default_value_t = 400)]
    pub points: usize,
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> i32 {
    let document = match commands::dispatch(&cli.command) {
        Ok(doc) => doc,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let target = cli.output.as_ref().map(|p| output::resolve(p));
    if let Err(e) = output::emit(&document, cli.format, target.as_deref()) {
        eprintln!("error: {e}");
        return EXIT_IO;
    }
    if document.passed {
        EXIT_OK
    } else {
        EXIT_VERIFICATION
    }
}
