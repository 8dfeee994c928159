//! `fdom`: collapse, benchmark, expand and verify bifiltered graphs.

mod commands;
mod input;
mod report;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fdom::build::DatasetKind;
use fdom::{GradeMode, Mode, OrderKind};
use serde::Serialize;

use crate::input::InputArgs;

/// Exit status for malformed command lines (BSD `EX_USAGE`).
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;
pub const EXIT_FAILURE: u8 = 1;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Input { path: String, source: fdom::Error },
    #[error("{0}")]
    Budget(String),
    #[error("{0}")]
    Failed(String),
    #[error(transparent)]
    Other(#[from] anyhow::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Input { .. } => EXIT_INPUT,
            CliError::Budget(_) => EXIT_BUDGET,
            CliError::Failed(_) | CliError::Other(_) => EXIT_FAILURE,
        }
    }
}

pub type CliResult<T = ()> = Result<T, CliError>;

/// Greedy removal of filtration-dominated edges from density-Rips style
/// bifiltered graphs.
///
/// Generated datasets: sphere (unit 2-sphere with 10% outliers in [-2,2]^3),
/// uniform (unit cube), circle (unit circle), torus (R=1, r=0.5, uniform
/// angles) and swiss-roll ((t cos t, y, t sin t), t in [1.5pi, 4.5pi],
/// y in [0, 21]).
#[derive(Debug, Parser)]
#[command(name = "fdom", version, about, long_about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Command {
    /// Remove dominated edges and write the reduced edge list.
    Collapse(CollapseArgs),
    /// Compare the five edge orders on one input (one report row per order).
    BenchOrders(BenchOrdersArgs),
    /// Optionally collapse, then export the 2-skeleton of the clique bifiltration.
    Expand(ExpandArgs),
    /// Run the brute-force oracle suites.
    Verify(verify::VerifyArgs),
    /// Write a generated point cloud or its density-Rips edge list.
    Generate(GenerateArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    Csv,
    Markdown,
}

#[derive(Debug, Args, Serialize)]
pub struct ReportArgs {
    /// Report format.
    #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
    pub format: ReportFormat,
    /// Write the report here instead of standard output.
    #[arg(long, value_name = "FILE")]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct CollapseOptions {
    /// Edge order: lex, colex, revlex, revcolex or random.
    #[arg(long, default_value = "revlex")]
    pub order: OrderKind,
    /// Domination test: strong or full.
    #[arg(long, default_value = "strong")]
    pub mode: Mode,
    /// Seed for generated datasets, random orders and random grade modes.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of consecutive passes; stops early when a pass removes nothing.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub iterations: u64,
    /// Grade transformation: original, zeroed, random, random-vertex or drop.
    #[arg(long, default_value = "original")]
    pub grade_mode: GradeMode,
}

#[derive(Debug, Args, Serialize)]
pub struct CollapseArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub options: CollapseOptions,
    #[command(flatten)]
    pub report: ReportArgs,
    /// Reduced edge list destination.
    #[arg(long, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct BenchOrdersArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub options: CollapseOptions,
    #[command(flatten)]
    pub report: ReportArgs,
    /// Alias for `--report`.
    #[arg(long, value_name = "FILE", conflicts_with = "report")]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ExportFormat {
    Scc2020,
}

#[derive(Debug, Args, Serialize)]
pub struct ExpandArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub options: CollapseOptions,
    /// Highest simplex dimension exported (only 2 is supported).
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(2..=2))]
    pub max_dim: u8,
    /// Export format.
    #[arg(long, value_enum, default_value_t = ExportFormat::Scc2020)]
    pub format: ExportFormat,
    /// Export destination.
    #[arg(long, value_name = "FILE")]
    pub output: PathBuf,
    /// Export the unreduced graph.
    #[arg(long)]
    pub no_collapse: bool,
    /// Refuse to export more triangles than this.
    #[arg(long, default_value_t = 20_000_000)]
    pub max_simplices: u64,
    /// Report format.
    #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
    pub report_format: ReportFormat,
    /// Write the report here instead of standard output.
    #[arg(long, value_name = "FILE")]
    pub report: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Emit {
    Points,
    Edges,
}

#[derive(Debug, Args, Serialize)]
pub struct GenerateArgs {
    /// sphere, uniform, circle, torus or swiss-roll.
    #[arg(long)]
    pub dataset: DatasetKind,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write the point cloud or the density-Rips edge list.
    #[arg(long, value_enum, default_value_t = Emit::Points)]
    pub emit: Emit,
    /// Grade transformation applied to emitted edge lists.
    #[arg(long, default_value = "original")]
    pub grade_mode: GradeMode,
    #[arg(long, value_name = "FILE")]
    pub output: PathBuf,
}

fn run(cli: Cli, argv: &[String]) -> CliResult {
    let config = report::ConfigEcho { version: fdom::VERSION, argv, command: &cli.command };
    match &cli.command {
        Command::Collapse(args) => commands::collapse(args, &config),
        Command::BenchOrders(args) => commands::bench_orders(args, &config),
        Command::Expand(args) => commands::expand(args, &config),
        Command::Verify(args) => verify::run(args),
        Command::Generate(args) => commands::generate(args),
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli, &argv) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fdom: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
