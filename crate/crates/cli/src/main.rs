//! `vanvleck` command-line front end.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use vanvleck::ErrorKind;

#[derive(Parser, Debug)]
#[command(name = "vanvleck", version, about = "Van Vleck zeros, Stieltjes polynomials and their spectral statistics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Van Vleck zeros of one order with Stieltjes polynomials and residuals.
    Zeros(ZerosArgs),
    /// Interlacing verdicts for orders (k, k+1), k = 1..k_max-1.
    Interlace(InterlaceArgs),
    /// Recurrence coefficients, their limits, and trace fits.
    Spectral(SpectralArgs),
    /// Limiting density, arcsine laws, empirical CDF, KS distances, Heun residuals.
    Density(DensityArgs),
    /// Lame eigenvalue classes at one degree and modulus.
    Lame(LameArgs),
    /// Complex zeros for singular points at the cube roots of unity.
    Equilateral(EquilateralArgs),
    /// Runs the acceptance suite.
    Report(ReportArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct Common {
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ProblemArgs {
    /// Singular points a1,a2,a3 (strictly increasing).
    #[arg(long, allow_hyphen_values = true, default_value = "-1,0,1")]
    pub alphas: String,
    /// Exponents r1,r2,r3 (positive).
    #[arg(long, allow_hyphen_values = true, default_value = "0.5,0.5,0.5")]
    pub rhos: String,
}

#[derive(Args, Debug)]
pub struct ZerosArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long)]
    pub k: usize,
    /// Largest ODE residual accepted before exiting with status 3.
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct InterlaceArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long, default_value_t = 50)]
    pub k_max: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum SpectralTable {
    #[default]
    Recurrence,
    Trace,
}

#[derive(Args, Debug)]
pub struct SpectralArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// Largest recurrence index n.
    #[arg(long, default_value_t = 100)]
    pub k_max: usize,
    /// Table written in CSV mode.
    #[arg(long, value_enum, default_value_t)]
    pub table: SpectralTable,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Printed,
    #[default]
    Standard,
}

#[derive(Args, Debug)]
pub struct DensityArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// Order whose zeros give the empirical CDF.
    #[arg(long, default_value_t = 400)]
    pub k: usize,
    /// Interior grid points.
    #[arg(long, default_value_t = 200)]
    pub points: usize,
    /// Arcsine support tabulated next to the density.
    #[arg(long, value_enum, default_value_t)]
    pub variant: Variant,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct LameArgs {
    /// Degree n of the Lame equation.
    #[arg(long)]
    pub n: usize,
    /// Elliptic modulus in (0, 1).
    #[arg(long)]
    pub modulus: f64,
    /// Restrict to one class g1,g2,g3 with entries in {0, 1}.
    #[arg(long)]
    pub gamma: Option<String>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct EquilateralArgs {
    /// Common exponent.
    #[arg(long, default_value_t = 0.5)]
    pub rho: f64,
    /// Exponents r1,r2,r3, overriding --rho. Unequal values are reported without rays.
    #[arg(long)]
    pub rhos: Option<String>,
    #[arg(long)]
    pub k: usize,
    /// Also compare ray moduli of orders 3k-1 and 3k+2.
    #[arg(long)]
    pub conjecture: bool,
    /// Largest ODE residual accepted before exiting with status 3.
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct ReportArgs {
    /// TOML file overriding suite sizes and tolerances.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Comma-separated criterion ids; all when absent.
    #[arg(long)]
    pub criteria: Option<String>,
    /// Include wall-clock seconds (output is then not reproducible byte for byte).
    #[arg(long)]
    pub timings: bool,
    #[command(flatten)]
    pub common: Common,
}

fn exit_code(kind: ErrorKind) -> u8 {
    match kind {
        ErrorKind::Validation => 1,
        ErrorKind::Solver => 2,
        ErrorKind::Invariant => 3,
    }
}

fn kind_name(kind: ErrorKind) -> &'static str {
    match kind {
        ErrorKind::Validation => "validation",
        ErrorKind::Solver => "solver",
        ErrorKind::Invariant => "invariant",
    }
}

fn configure_threads() -> Result<(), commands::CliError> {
    if let Ok(v) = std::env::var("HS_THREADS") {
        let n: usize =
            v.trim().parse().map_err(|_| commands::CliError::validation("HS_THREADS", format!("not a positive integer: {v:?}")))?;
        if n == 0 {
            return Err(commands::CliError::validation("HS_THREADS", "must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| commands::CliError::Io(e.to_string()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("").trim_start_matches("error: ");
            eprintln!("error kind=validation: {first}");
            return ExitCode::from(1);
        }
    };
    match configure_threads().and_then(|()| commands::run(cli.command)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let kind = e.kind();
            eprintln!("error kind={}: {}", kind_name(kind), e.to_string().replace('\n', " "));
            ExitCode::from(exit_code(kind))
        }
    }
}
