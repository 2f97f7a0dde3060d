mod commands;
mod format;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact computations on finite test spaces, their state polytopes and
/// group-theoretic extensions.
#[derive(Debug, Parser)]
#[command(name = "tsl", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a test space and write it as JSON.
    Build(BuildArgs),
    /// Vertices, dimension, sharpness or dispersion-free states of a space.
    States(StatesArgs),
    /// Combine two spaces, or build an extension tensor.
    Product(ProductArgs),
    /// Decide one property; exits 1 when it fails.
    Check(CheckArgs),
    /// The orthoalgebra of an algebraic space.
    Logic(LogicArgs),
    /// Laws, regularity or reasonableness of a built-in extension.
    Ext(ExtArgs),
    /// Run a verification suite and write a report.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BuildKind {
    Classical,
    Grid,
    Graph,
    Triangle,
    Bits,
    Construction,
    ExtSpace,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    kind: BuildKind,
    /// Carrier size.
    #[arg(long)]
    n: Option<usize>,
    /// Comma-separated outcome labels for the carrier (overrides --n).
    #[arg(long, value_delimiter = ',')]
    labels: Option<Vec<String>>,
    /// Extension for `construction` and `ext-space`.
    #[arg(long, default_value = "graph")]
    ext: String,
    #[arg(long, default_value_t = 0)]
    base: usize,
    /// Replace a construction by its strongly symmetric quotient.
    #[arg(long)]
    strongify: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StatesArgs {
    space: PathBuf,
    #[arg(long, group = "states_mode")]
    vertices: bool,
    #[arg(long, group = "states_mode")]
    dim: bool,
    #[arg(long, group = "states_mode")]
    sharp: bool,
    #[arg(long, group = "states_mode")]
    dispersion_free: bool,
    /// Write weight lists as CSV instead of JSON.
    #[arg(long)]
    csv: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ProductArgs {
    /// Factor spaces; not used with --ext-tensor.
    spaces: Vec<PathBuf>,
    #[arg(long, group = "product_mode")]
    cartesian: bool,
    #[arg(long, group = "product_mode")]
    fr: bool,
    #[arg(long, group = "product_mode")]
    sum: bool,
    #[arg(long, group = "product_mode")]
    ext_tensor: bool,
    #[arg(long, default_value = "graph")]
    ext: String,
    #[arg(long, default_value_t = 2)]
    na: usize,
    #[arg(long, default_value_t = 2)]
    nb: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// `SPACE` for --algebraic and --sharp; `A B STATE` for --nonsignaling
    /// and --separable; `SOURCE TARGET MAP` for --morphism.
    files: Vec<PathBuf>,
    #[arg(long, group = "check_mode")]
    nonsignaling: bool,
    #[arg(long, group = "check_mode")]
    separable: bool,
    #[arg(long, group = "check_mode")]
    algebraic: bool,
    #[arg(long, group = "check_mode")]
    sharp: bool,
    #[arg(long, group = "check_mode")]
    morphism: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LogicArgs {
    space: PathBuf,
    /// Hasse diagram in DOT instead of the JSON summary.
    #[arg(long)]
    dot: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExtArgs {
    #[arg(long, default_value = "graph")]
    ext: String,
    #[arg(long, group = "ext_mode")]
    laws: bool,
    #[arg(long, group = "ext_mode")]
    regular: bool,
    #[arg(long, group = "ext_mode")]
    reasonable: bool,
    #[arg(long, default_value_t = 3)]
    max_n: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// `claims` (alias `paper`), `extension-laws` or `products`.
    suite: String,
    #[arg(long, default_value = "graph")]
    ext: String,
    #[arg(long, default_value_t = 3)]
    max_n: usize,
    /// Report destination; stdout when absent.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Expected refutations; the shipped file is used when absent.
    #[arg(long)]
    expectations: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Build(a) => commands::build(&a),
        Command::States(a) => commands::states(&a),
        Command::Product(a) => commands::product(&a),
        Command::Check(a) => commands::check(&a),
        Command::Logic(a) => commands::logic(&a),
        Command::Ext(a) => commands::ext(&a),
        Command::Verify(a) => commands::verify(&a),
    };
    match result {
        Ok(commands::Outcome::Success) => ExitCode::SUCCESS,
        Ok(commands::Outcome::Refuted) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
