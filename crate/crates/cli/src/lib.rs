//! `diskdet` command-line front end.
//!
//! Every subcommand writes machine-readable output (JSON by default, CSV with
//! `--format csv` where the data is tabular) and maps failures to exit codes:
//! `1` for malformed input, `2` for domain errors such as an unsupported flux
//! sector, `3` for numerical non-convergence or a failed self-check.

pub mod commands;
pub mod config;
pub mod error;
pub mod selftest;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use config::{Profile, RunConfig, ToleranceOverrides, TOL_ENV};
pub use error::CliError;

#[derive(Debug, Parser)]
#[command(name = "diskdet", version, about = "Dirac determinants on a disk with spectral boundary conditions")]
pub struct Cli {
    /// Write the result here instead of stdout (takes precedence over the
    /// config's `output_path`).
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Log-determinant of the Dirac operator for a flux profile.
    Det {
        #[arg(long)]
        config: PathBuf,
        /// Take the free quotient from the Bessel-ratio series instead of
        /// from `f'_ν(0)`.
        #[arg(long)]
        ratio_route: bool,
    },
    /// Index computed from zero modes, chirality and the η-invariant.
    Index(IndexArgs),
    /// η-invariant of the boundary operator, closed form and numeric.
    Eta {
        #[arg(long, allow_hyphen_values = true)]
        kappa: f64,
        /// Pairing cutoff of the numeric series.
        #[arg(long, default_value_t = 1000)]
        cutoff: usize,
    },
    /// `f_ν(0)` and `f'_ν(0)` of the Bessel-zero zeta function.
    Zeta {
        #[arg(long, allow_hyphen_values = true)]
        nu: f64,
        /// Also continue `f_ν(s)` to `s = 0` numerically over this many zeros.
        #[arg(long)]
        continued: Option<usize>,
    },
    /// Positive zeros of `J_ν`.
    Zeros {
        #[arg(long, allow_hyphen_values = true)]
        nu: f64,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Exact free spectrum `j/R` of one angular mode.
    Spectrum {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, default_value_t = 1.0)]
        radius: f64,
        #[arg(long, default_value_t = 5)]
        count: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Calderón-projector symbols and the ellipticity rank test.
    #[command(subcommand)]
    Symbol(SymbolCommand),
    /// Finite-difference spectrum of one free mode against the exact one.
    Oracle {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, default_value_t = 1.0)]
        radius: f64,
        #[arg(long, default_value_t = 2000)]
        grid: usize,
        #[arg(long, default_value_t = diskdet_core::oracle::FD_EIGENVALUES)]
        count: usize,
        /// Exit with status 3 if the largest relative error exceeds this.
        #[arg(long)]
        require: Option<f64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Runs every invariant check and prints one line per check.
    Selftest {
        /// Scale every Bessel zero used by the zeta check by `1 + REL`.
        /// Fault injection: the check is expected to fail.
        #[arg(long, value_name = "REL", allow_hyphen_values = true)]
        perturb_zeros: Option<f64>,
        /// Emit the report as JSON instead of one line per check.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct IndexArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: Option<f64>,
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OperatorArg {
    Full2d,
    Chiral2d,
    Full4d,
    Chiral4d,
}

impl From<OperatorArg> for diskdet_core::symbols::Operator {
    fn from(op: OperatorArg) -> Self {
        use diskdet_core::symbols::Operator;
        match op {
            OperatorArg::Full2d => Operator::Full2d,
            OperatorArg::Chiral2d => Operator::Chiral2d,
            OperatorArg::Full4d => Operator::Full4d,
            OperatorArg::Chiral4d => Operator::Chiral4d,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum SymbolCommand {
    /// The Calderón symbol `½(I + iγ(n)γ(ξ))` at one cotangent vector.
    Calderon {
        #[arg(long)]
        dim: usize,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        xi: Vec<f64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        normal: Vec<f64>,
    },
    /// Rank test of a boundary condition against an operator's symbol.
    Ellipticity {
        #[arg(long, value_enum)]
        operator: OperatorArg,
        /// Local condition `β₁ψ₁ + β₂ψ₂ = 0`; omit for the spectral pair.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        beta: Option<Vec<f64>>,
        #[arg(long, default_value_t = 2000)]
        samples: usize,
    },
    /// Cotangent vector where the local chiral condition loses rank.
    Witness {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        beta: Vec<f64>,
    },
}

/// What a subcommand produced, before it is written out.
#[derive(Debug)]
pub struct Rendered {
    pub body: String,
    /// Destination requested by the config, if any.
    pub output_path: Option<PathBuf>,
    /// Set when the body was produced but the run still counts as failed.
    pub failure: Option<CliError>,
}

/// Parses `argv` (program name first) and executes it, writing results to the
/// process's stdout/stderr. Returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env = std::env::var(TOL_ENV).ok();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, env.as_deref(), &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with an explicit `DISKDET_TOL` value and output streams.
pub fn run_with<I, T>(argv: I, env_tol: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    1
                }
            };
        }
    };
    let result = commands::execute(&cli.command, env_tol).and_then(|rendered| {
        let target = cli.output.clone().or_else(|| rendered.output_path.clone());
        emit_to(&rendered.body, target, out)?;
        Ok(rendered.failure)
    });
    let failure = match result {
        Ok(failure) => failure,
        Err(e) => Some(e),
    };
    match failure {
        None => 0,
        Some(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn emit_to(body: &str, target: Option<PathBuf>, out: &mut dyn Write) -> Result<(), CliError> {
    match target {
        Some(path) => std::fs::write(&path, body).map_err(|source| CliError::Io { path, source }),
        None => out.write_all(body.as_bytes()).map_err(|source| CliError::Io {
            path: PathBuf::from("<stdout>"),
            source,
        }),
    }
}
