mod sample;
mod table;
mod verify;

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use minusone::littlejacobi::ParamPair;
use minusone::susyqm::SchrodingerParams;
use minusone::{parse_rational, Rational};

/// Little -1 Jacobi polynomials: tables, verification suites and samples.
#[derive(Debug, Parser)]
#[command(name = "minusone", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Recurrence data, eigenvalues and monic coefficients for n = 1..=N.
    Table(TableArgs),
    /// Run a verification suite. Exit 0 iff every check passes.
    Verify(VerifyArgs),
    /// Emit CSV samples for plotting.
    Sample(SampleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct Common {
    /// alpha > -1, as "p/q" or an integer
    #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
    alpha: String,
    /// beta > -1, as "p/q" or an integer
    #[arg(long, default_value = "3/2", allow_hyphen_values = true)]
    beta: String,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write to this file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[command(flatten)]
    common: Common,
    /// Largest degree
    #[arg(long, default_value_t = 10)]
    n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Orthogonality,
    Eigen,
    Explicit,
    Dunkl,
    Raising,
    Transforms,
    Aw,
    Prop2,
    Qlimit,
    Susy,
    All,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum)]
    suite: Suite,
    /// Largest degree checked
    #[arg(long, default_value_t = 10)]
    n: usize,
    /// Well parameter a > 1/2 for the susy suite
    #[arg(long, default_value = "3/2")]
    a: String,
    /// Highest level n for the susy suite
    #[arg(long, default_value_t = 5)]
    levels: usize,
    /// Coarse and fine epsilon for the qlimit suite
    #[arg(long, num_args = 2, value_delimiter = ',', default_values_t = [1e-3, 1e-4])]
    eps: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Weight,
    Eigenfunction,
    Wavefunction,
    Potential,
}

#[derive(Debug, Args)]
struct SampleArgs {
    #[arg(value_enum)]
    target: Target,
    #[command(flatten)]
    common: Common,
    /// Number of grid points
    #[arg(long, default_value_t = 200)]
    points: usize,
    /// Eigenvalue for the eigenfunction target
    #[arg(long, default_value_t = 1.3, allow_hyphen_values = true)]
    lambda: f64,
    /// Well parameter a > 1/2
    #[arg(long, default_value = "3/2")]
    a: String,
    /// Highest wavefunction index
    #[arg(long, default_value_t = 3)]
    n: usize,
}

/// Failure classes mapped to exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Bad input or a domain violation: exit 2.
    Usage(String),
    /// I/O failure: exit 2.
    Io(io::Error),
}

impl From<minusone::Error> for CliError {
    fn from(e: minusone::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        match e.into_kind() {
            csv::ErrorKind::Io(e) => CliError::Io(e),
            other => CliError::Io(io::Error::other(format!("{other:?}"))),
        }
    }
}

fn rational(name: &str, s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|_| CliError::Usage(format!("{name}: cannot parse {s:?} as p/q")))
}

impl Common {
    fn params(&self) -> Result<ParamPair, CliError> {
        Ok(ParamPair::new(rational("alpha", &self.alpha)?, rational("beta", &self.beta)?)?)
    }

    fn sink(&self) -> Result<Box<dyn Write>, CliError> {
        Ok(match &self.output {
            Some(path) => Box::new(io::BufWriter::new(File::create(path)?)),
            None => Box::new(io::BufWriter::new(io::stdout().lock())),
        })
    }
}

fn well(a: &str) -> Result<SchrodingerParams, CliError> {
    Ok(SchrodingerParams::new(rational("a", a)?)?)
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Table(args) => {
            if args.n == 0 {
                return Err(CliError::Usage("--n must be at least 1".into()));
            }
            let p = args.common.params()?;
            table::write(&p, args.n, args.common.format, args.common.sink()?)?;
            Ok(true)
        }
        Command::Verify(args) => {
            let cfg = verify::SuiteConfig {
                params: args.common.params()?,
                max_degree: args.n,
                well: well(&args.a)?,
                levels: args.levels,
                eps: (args.eps[0], args.eps[1]),
            };
            if !(cfg.eps.0 > cfg.eps.1 && cfg.eps.1 > 0.0) {
                return Err(CliError::Usage("--eps needs coarse > fine > 0".into()));
            }
            let lines = verify::run(args.suite, &cfg)?;
            verify::write(&lines, args.common.format, args.common.sink()?)?;
            let failed = lines.iter().filter(|l| !l.pass).count();
            eprintln!("{} checks, {} failed", lines.len(), failed);
            Ok(failed == 0)
        }
        Command::Sample(args) => {
            if args.points == 0 {
                return Err(CliError::Usage("--points must be at least 1".into()));
            }
            let out = args.common.sink()?;
            match args.target {
                Target::Weight => sample::weight(&args.common.params()?, args.points, out)?,
                Target::Eigenfunction => sample::eigenfunction(&args.common.params()?, args.lambda, args.points, out)?,
                Target::Wavefunction => sample::wavefunctions(&well(&args.a)?, args.n, args.points, out)?,
                Target::Potential => sample::potential_curve(&well(&args.a)?, args.points, out)?,
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        // a closed downstream pipe (`| head`) is not an error
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
