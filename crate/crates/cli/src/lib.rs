//! Command-line front end for the `deuler` library.
//!
//! The binary is a thin wrapper around [`run`], which turns parsed arguments
//! into the bytes to print and an exit code. Tests drive it in-process.

pub mod codec;
pub mod commands;
pub mod document;

use clap::{Args, Parser, Subcommand, ValueEnum};
use deuler::Rational;

pub use codec::{parse_lambda_arg, LambdaArg};
pub use commands::{run, CliError, Outcome, CAP_ENV, DEFAULT_N_CAP};

fn parse_rational(s: &str) -> Result<Rational, deuler::algebra::ParseRationalError> {
    s.parse()
}

#[derive(Debug, Parser)]
#[command(
    name = "deuler",
    version,
    about = "Exact degenerate Eulerian, Bernoulli and Stirling numbers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit a table of a sequence family for n = 0..=n_max.
    Table(TableArgs),
    /// Evaluate a single quantity.
    #[command(subcommand)]
    Eval(EvalTarget),
    /// Run the identity verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFamily {
    EulerianNumber,
    EulerianPoly,
    Bernoulli,
    Stirling1,
    Stirling2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableRoute {
    Explicit,
    Recursion,
    GfRecursion,
    Eulerian,
    Triangular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DataFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct Rendering {
    /// λ as `symbolic` or an exact rational `p/q`.
    #[arg(long, default_value = "symbolic", value_parser = parse_lambda_arg, allow_hyphen_values = true)]
    pub lambda: LambdaArg,
    #[arg(long, value_enum, default_value_t = DataFormat::Json)]
    pub format: DataFormat,
    /// Render values as readable polynomials instead of a machine format.
    #[arg(long)]
    pub human: bool,
    /// Record the generation time in metadata.
    #[arg(long)]
    pub timestamp: bool,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub family: TableFamily,
    #[arg(long)]
    pub n_max: usize,
    /// eulerian-*: explicit | recursion | gf-recursion; stirling2: explicit |
    /// eulerian; bernoulli, stirling1: triangular.
    #[arg(long, value_enum)]
    pub route: Option<TableRoute>,
    #[command(flatten)]
    pub render: Rendering,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PowerSumRouteArg {
    Direct,
    Eulerian,
    Bernoulli,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EulerianAtRoute {
    Explicit,
    Recursion,
    GfRecursion,
    /// Closed form through Bernoulli numbers; only for `--x -1`.
    Bernoulli,
}

#[derive(Debug, Clone, Subcommand)]
pub enum EvalTarget {
    /// Σ_{k=0}^{m} (k)_{n,λ}.
    Powersum {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = PowerSumRouteArg::Direct)]
        route: PowerSumRouteArg,
        #[command(flatten)]
        render: Rendering,
    },
    /// The degenerate Eulerian polynomial of degree n at x.
    EulerianAt {
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        x: Rational,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = EulerianAtRoute::Explicit)]
        route: EulerianAtRoute,
        #[command(flatten)]
        render: Rendering,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Run every registered check (the default without --check).
    #[arg(long, value_enum, conflicts_with = "check")]
    pub suite: Option<Suite>,
    /// Run only the named check; repeatable.
    #[arg(long)]
    pub check: Vec<String>,
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long)]
    pub m_max: Option<usize>,
    #[arg(long)]
    pub k_max: Option<usize>,
    /// Compare at a fixed set of rational λ instead of as polynomials.
    #[arg(long)]
    pub smoke: bool,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    pub format: ReportFormat,
    #[arg(long)]
    pub timestamp: bool,
}
