//! `crosscrit`: generate crossing-critical graphs and their drawings,
//! verify and count drawings, run the exact solver and the structural
//! analyzers. Every command writes JSON; `--pretty` prints a table instead.

pub mod analyze;
pub mod drawings;
pub mod output;
pub mod solve;

use clap::{Args, Parser, Subcommand, ValueEnum};
use output::{CliError, Sink};
use std::ffi::OsString;
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "crosscrit", version, about = "Crossing-critical graph workbench")]
pub struct Cli {
    /// Print a human-readable rendering instead of JSON on stdout.
    #[arg(long, global = true)]
    pretty: bool,
    /// Write the artifact to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads; the CROSSCRIT_THREADS environment variable overrides it.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Svg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph.
    Gen(drawings::GenArgs),
    /// Build a figure drawing, a drop drawing or a wedge contraction.
    Draw(drawings::DrawArgs),
    /// Count the crossings of a drawing.
    Count(FileArg),
    /// Check a drawing's invariants and optionally its crossing total.
    Verify(drawings::VerifyArgs),
    /// Compute the crossing number of a graph.
    Solve(solve::SolveArgs),
    /// Criticality certificates for ccg13 or any graph.
    Crit(solve::CritArgs),
    /// Structural analyzers.
    Analyze(analyze::AnalyzeArgs),
    /// Leaf-count and extension thresholds.
    Thresholds(analyze::ThresholdArgs),
}

#[derive(Debug, Args)]
pub struct FileArg {
    pub file: PathBuf,
}

fn threads(flag: usize) -> Result<usize, CliError> {
    let n = match std::env::var("CROSSCRIT_THREADS") {
        Ok(v) => v.trim().parse().map_err(|_| output::bad(format!("CROSSCRIT_THREADS={v:?} is not a number")))?,
        Err(_) => flag,
    };
    if n == 0 {
        return Err(output::bad("thread count must be at least 1"));
    }
    Ok(n)
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    let sink = Sink { out: cli.out, pretty: cli.pretty };
    let threads = threads(cli.threads)?;
    match cli.command {
        Command::Gen(a) => drawings::gen(&a, &sink),
        Command::Draw(a) => drawings::draw(&a, &sink),
        Command::Count(a) => drawings::count(&a.file, &sink),
        Command::Verify(a) => drawings::verify(&a, &sink),
        Command::Solve(a) => solve::solve(&a, threads, &sink),
        Command::Crit(a) => solve::crit(&a, threads, &sink),
        Command::Analyze(a) => analyze::analyze(&a, &sink),
        Command::Thresholds(a) => analyze::thresholds(&a, &sink),
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { output::EXIT_BAD_ARGS } else { 0 };
        }
    };
    match run(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("crosscrit: {e}");
            e.exit_code()
        }
    }
}
