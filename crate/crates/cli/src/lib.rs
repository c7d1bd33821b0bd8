//! The `idpoly` command line: `compute`, `generate`, `verify` and `bench`.
//!
//! Exit codes: 0 success, 1 verification failures, 2 unreadable or
//! malformed input (including invalid family parameters), 3 graph above an
//! algorithm's size limit, 4 algorithm not applicable to the input.

mod bench;
mod compute;
mod input;
mod verify;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

pub use input::{FamilyArgs, InputArgs};

#[derive(Debug, Parser)]
#[command(name = "idpoly", version, about = "Independent domination polynomials of graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute id(G, x) for one graph.
    Compute(ComputeArgs),
    /// Write a family member in edge-list format.
    Generate(GenerateArgs),
    /// Check identities over a corpus of graphs.
    Verify(VerifyArgs),
    /// Time algorithms over a corpus of graphs.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Machine,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, default_value = "recursive")]
    pub alg: String,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Override the size limit of the exponential algorithms.
    #[arg(long)]
    pub max_n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Corpus {
    #[default]
    Exhaustive,
    Random,
    Files,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// `all`, or identity names separated by commas.
    #[arg(long, default_value = "all")]
    pub scope: String,
    #[arg(long, value_enum, default_value_t)]
    pub corpus: Corpus,
    /// Largest vertex count of the exhaustive corpus.
    #[arg(long, default_value_t = 5)]
    pub max_n: usize,
    /// Number of random graphs.
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    /// Vertex count of random graphs.
    #[arg(long, default_value_t = 10)]
    pub n: usize,
    #[arg(long, default_value_t = 0.5)]
    pub prob: f64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Edge-list files for `--corpus files`.
    #[arg(long = "input")]
    pub inputs: Vec<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated algorithm names.
    #[arg(long, default_value = "brute,recursive,inclusion-exclusion,essential,coefficient")]
    pub alg: String,
    #[command(flatten)]
    pub family: Option<FamilyArgs>,
    /// Random corpus size, used when no family is given.
    #[arg(long, default_value_t = 3)]
    pub count: usize,
    /// Edge-list files to time instead of a family or random corpus.
    #[arg(long = "input")]
    pub inputs: Vec<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

/// An error that ends the process with a specific exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BOUND: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

impl Failure {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<idpoly::Error> for Failure {
    fn from(e: idpoly::Error) -> Self {
        let code = match e {
            idpoly::Error::SizeBound { .. } => EXIT_BOUND,
            idpoly::Error::LoopsPresent(_) | idpoly::Error::EmptyGraph(_) => EXIT_MISMATCH,
            _ => EXIT_INPUT,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(EXIT_INPUT, e.to_string())
    }
}

/// Runs a parsed command, writing results to `out`. Returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    match cli.command {
        Command::Compute(args) => compute::run(&args, out).map(|_| 0),
        Command::Generate(args) => input::generate(&args, out).map(|_| 0),
        Command::Verify(args) => verify::run(&args, out),
        Command::Bench(args) => bench::run(&args, out).map(|_| 0),
    }
}
