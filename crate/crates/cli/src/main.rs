mod commands;
mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use irregmix::Error;

use input::{InputArgs, Source};
use output::{Format, Printer};

#[derive(Parser, Debug)]
#[command(name = "irregmix", version, about = "Perron-weighted mixing lemmas, spectral bounds and exact oracles")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Spectral summary of a graph.
    Analyze(AnalyzeArgs),
    /// Evaluate a mixing inequality on one pair of sets, or sweep all pairs.
    Eml(EmlArgs),
    /// Spectral bounds on zero forcing, integrity, routing or k-independence.
    Bounds(BoundsArgs),
    /// Exact values by exhaustive search.
    Oracle(OracleArgs),
    /// Write a generated graph.
    Gen(GenArgs),
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub input: InputArgs,
}

#[derive(Args, Debug)]
pub struct EmlArgs {
    #[command(flatten)]
    pub input: InputArgs,

    /// Theorem to evaluate on `--s`/`--t`.
    #[arg(long, required_unless_present = "sweep", conflicts_with = "sweep")]
    pub theorem: Option<String>,

    /// Comma-separated vertex list.
    #[arg(long, value_name = "LIST", required_unless_present = "sweep", allow_hyphen_values = true)]
    pub s: Option<String>,

    /// Comma-separated vertex list; defaults to `S` for single-set theorems and to the complement of `S` otherwise.
    #[arg(long, value_name = "LIST")]
    pub t: Option<String>,

    /// Check every pair (exhaustive for small graphs, seeded samples otherwise).
    #[arg(long)]
    pub sweep: bool,

    /// `all` or a comma-separated list of theorems for `--sweep`.
    #[arg(long, default_value = "all")]
    pub theorems: String,

    #[arg(long, default_value_t = 42)]
    pub seed: u64,

    /// Sample count when the graph is too large for exhaustive enumeration.
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,

    /// Largest vertex count enumerated exhaustively.
    #[arg(long, default_value_t = 7)]
    pub max_exhaustive: usize,

    /// Walk length for the walk bounds and the default polynomial.
    #[arg(long, default_value_t = 2)]
    pub k: usize,

    /// Polynomial coefficients, low degree first, e.g. `0,1,1`.
    #[arg(long, allow_hyphen_values = true)]
    pub poly: Option<String>,

    /// Equitable partition `0,1;2,3` for the cell-restricted bound.
    #[arg(long)]
    pub partition: Option<String>,

    /// Column weights for the general matrix bound (default all ones).
    #[arg(long)]
    pub x: Option<String>,

    /// Row weights for the general matrix bound (default the Perron vector).
    #[arg(long)]
    pub y: Option<String>,

    /// Relative slack tolerance for reporting a violation.
    #[arg(long, default_value_t = irregmix::eml::TOL_SLACK, allow_hyphen_values = true)]
    pub tol_slack: f64,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub input: InputArgs,

    /// zero-forcing, integrity, routing or k-independence.
    #[arg(long)]
    pub param: String,

    #[arg(long, default_value_t = 1)]
    pub k: usize,

    /// Polynomial for k-independence, low degree first; defaults to x + .. + x^k.
    #[arg(long, allow_hyphen_values = true)]
    pub poly: Option<String>,

    /// Also run the exact oracle and compare.
    #[arg(long)]
    pub oracle: bool,

    /// Oracle size limit override.
    #[arg(long)]
    pub budget: Option<usize>,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[command(flatten)]
    pub input: InputArgs,

    /// zero-forcing, grundy, integrity, k-independence, routing or walks.
    #[arg(long)]
    pub param: String,

    #[arg(long, default_value_t = 1)]
    pub k: usize,

    /// Size limit override.
    #[arg(long)]
    pub budget: Option<usize>,

    /// Routing: a single permutation `p0,p1,..` (pebble on v goes to p_v).
    #[arg(long)]
    pub perm: Option<String>,

    /// Walks: start set.
    #[arg(long)]
    pub s: Option<String>,

    /// Walks: end set.
    #[arg(long)]
    pub t: Option<String>,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    /// Family name or full spec (`kite`, `cocktail_party:3`, `join:petersen,complete:2`).
    pub family: String,

    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    /// Pairs in a cocktail party graph.
    #[arg(long)]
    pub m: Option<usize>,

    /// Operand for `double_cover`: a graph file or generator spec.
    #[arg(long)]
    pub of: Option<String>,
    /// Left operand for `join` / `cartesian_product`.
    #[arg(long)]
    pub left: Option<String>,
    /// Right operand for `join` / `cartesian_product`.
    #[arg(long)]
    pub right: Option<String>,

    /// Output file; stdout if absent.
    #[arg(short, long)]
    pub output: Option<PathBuf>,

    /// Graph format; defaults to edge list for `.txt`/`.edges` files and graph6 otherwise.
    #[arg(long = "as", value_enum)]
    pub graph_format: Option<commands::GraphFormat>,
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Input(_) | Error::Parse { .. } => 2,
        Error::Inapplicable(_) | Error::Numeric(_) => 3,
        Error::Budget { .. } => 4,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Input(_) => "input",
        Error::Parse { .. } => "parse",
        Error::Inapplicable(_) => "inapplicable",
        Error::Numeric(_) => "numeric",
        Error::Budget { .. } => "budget",
    }
}

fn run_on_source(
    source: Source,
    format: Format,
    run: impl Fn(&irregmix::Graph) -> irregmix::Result<output::Output>,
) -> ExitCode {
    let stdout = std::io::stdout().lock();
    match source {
        Source::Single(graph) => {
            let mut printer = Printer::new(stdout, format, false);
            match graph.and_then(|g| run(&g)) {
                Ok(out) => match printer.emit(None, &out) {
                    Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                        eprintln!("error: {e}");
                        ExitCode::from(2)
                    }
                    _ => ExitCode::from(u8::from(out.violation)),
                },
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(exit_code(&e))
                }
            }
        }
        Source::Batch(graphs) => {
            let mut printer = Printer::new(stdout, format, true);
            let mut code = 0u8;
            for (i, graph) in graphs.into_iter().enumerate() {
                let written = match graph.and_then(|g| run(&g)) {
                    Ok(out) => {
                        code = code.max(u8::from(out.violation));
                        printer.emit(Some(i), &out)
                    }
                    Err(e) => {
                        code = code.max(exit_code(&e));
                        printer.emit_error(i, error_kind(&e), &e.to_string())
                    }
                };
                match written {
                    Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => return ExitCode::from(code),
                    Err(e) => {
                        eprintln!("error: {e}");
                        return ExitCode::from(2);
                    }
                    Ok(()) => {}
                }
            }
            ExitCode::from(code)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze(args) => run_on_source(args.input.load(), cli.format, commands::analyze),
        Command::Eml(args) => run_on_source(args.input.load(), cli.format, |g| commands::eml(g, &args)),
        Command::Bounds(args) => run_on_source(args.input.load(), cli.format, |g| commands::bounds(g, &args)),
        Command::Oracle(args) => run_on_source(args.input.load(), cli.format, |g| commands::oracle(g, &args)),
        Command::Gen(args) => match commands::gen(&args) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(exit_code(&e))
            }
        },
    }
}
