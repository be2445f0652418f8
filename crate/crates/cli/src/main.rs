use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use randic_cli::compute::compute_all;
use randic_cli::dominance::{run_dominance, Pair, DEFAULT_PAIRS};
use randic_cli::output::{sink, write_csv, write_json, OutputFormat};
use randic_cli::registry::{registry_dump, registry_rows};
use randic_cli::source::GraphSource;
use randic_cli::verify::{run_verification, with_pool, SuiteConfig, DEFAULT_ALPHAS};
use randic_core::bounds::{InvariantConfig, DEFAULT_SLACK};
use randic_core::combinatorial::{DEFAULT_CHROMATIC_EXACT_LIMIT, DEFAULT_NODE_BUDGET};

const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(name = "randic", version, about = "General Randić index bounds: compute, verify, compare")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print n, m, degrees, λ, ω, χ, R_α and Q_α for each graph and exponent.
    Compute(ComputeArgs),
    /// Check every applicable bound on every graph and exponent.
    Verify(VerifyArgs),
    /// Compare the right-hand sides of pairs of bounds.
    Dominance(DominanceArgs),
    /// Dump the bound catalogue.
    Registry(OutputArgs),
}

#[derive(Args)]
struct SourceArgs {
    /// graph6 file, one graph per line (repeatable).
    #[arg(long)]
    input: Vec<PathBuf>,
    /// Family name: star, complete, complete_bipartite, complete_multipartite,
    /// turan, cycle, path, circulant, petersen, random_gnp, random_tree.
    #[arg(long)]
    family: Option<String>,
    /// Family parameters, e.g. `3..8`, `a=1..6,b=1..6`, `n=4..12,p=0.3;0.5;0.8`.
    #[arg(long, requires = "family", default_value = "")]
    params: String,
    /// Seed for the random families.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Number of graphs drawn from a random family.
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Comma-separated exponent grid.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    alpha: Vec<f64>,
    /// Node budget for the clique and colouring searches.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    search_budget: u64,
    /// Largest order for which χ is computed exactly.
    #[arg(long, default_value_t = DEFAULT_CHROMATIC_EXACT_LIMIT)]
    chromatic_exact_limit: usize,
}

impl SourceArgs {
    fn sources(&self) -> Vec<GraphSource> {
        let mut out: Vec<GraphSource> = self.input.iter().cloned().map(GraphSource::File).collect();
        if let Some(name) = &self.family {
            out.push(GraphSource::Family {
                name: name.clone(),
                params: self.params.clone(),
            });
        }
        out
    }

    fn alphas(&self) -> Vec<f64> {
        if self.alpha.is_empty() {
            DEFAULT_ALPHAS.to_vec()
        } else {
            self.alpha.clone()
        }
    }

    fn invariants(&self) -> InvariantConfig {
        let mut cfg = InvariantConfig::default();
        cfg.combinatorial.clique_node_budget = self.search_budget;
        cfg.combinatorial.coloring_node_budget = self.search_budget;
        cfg.combinatorial.chromatic_exact_limit = self.chromatic_exact_limit;
        cfg
    }

    fn suite(&self, tol: f64, jobs: usize) -> SuiteConfig {
        SuiteConfig {
            sources: self.sources(),
            alphas: self.alphas(),
            tol,
            seed: self.seed,
            trials: self.trials,
            bounds: None,
            jobs,
            format: OutputFormat::Csv,
            invariants: self.invariants(),
        }
    }
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    /// Write here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    out: OutputArgs,
    /// Worker threads (0: one per core).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    out: OutputArgs,
    /// Relative comparison slack.
    #[arg(long, default_value_t = DEFAULT_SLACK)]
    tol: f64,
    /// Worker threads (0: one per core).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Exit with 3 if any row was skipped for a missing invariant.
    #[arg(long)]
    strict: bool,
    /// Comma-separated bound ids to check (default: all).
    #[arg(long, value_delimiter = ',')]
    bounds: Vec<String>,
}

#[derive(Args)]
struct DominanceArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    out: OutputArgs,
    /// Relative slack below which two sides count as tied.
    #[arg(long, default_value_t = DEFAULT_SLACK)]
    tol: f64,
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// FIRST:SECOND bound ids (repeatable; default C1:BE-L, C2:LY, C7:BE9-L).
    #[arg(long)]
    pair: Vec<String>,
}

/// Failures that map to the input-error exit code.
struct InputError(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for InputError {
    fn from(e: E) -> Self {
        Self(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(InputError(e)) => {
            let mut msg = e.to_string();
            for cause in e.chain().skip(1).map(ToString::to_string) {
                if !msg.contains(&cause) {
                    msg = format!("{msg}: {cause}");
                }
            }
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(cli: Cli) -> Result<u8, InputError> {
    match cli.command {
        Command::Compute(args) => {
            let suite = args.source.suite(DEFAULT_SLACK, args.jobs);
            suite.validate()?;
            let graphs = suite.load_graphs()?;
            let rows = with_pool(args.jobs, || compute_all(&graphs, &suite.alphas, &suite.invariants))?;
            emit(&args.out, &rows, &rows)?;
            Ok(0)
        }
        Command::Verify(args) => {
            let mut suite = args.source.suite(args.tol, args.jobs);
            suite.format = args.out.format;
            if !args.bounds.is_empty() {
                suite.bounds = Some(args.bounds.clone());
            }
            suite.validate()?;
            let graphs = suite.load_graphs()?;
            let report = run_verification(&graphs, &suite)?;
            emit(&args.out, &report, &report.results)?;
            let s = &report.summary;
            eprintln!(
                "checked {} held {} violated {} skipped {} equality predicted {} failed {}",
                s.checked, s.held, s.violated, s.skipped, s.equality_predicted, s.equality_failures
            );
            Ok(report.exit_code(args.strict))
        }
        Command::Dominance(args) => {
            let suite = args.source.suite(args.tol, args.jobs);
            suite.validate()?;
            let pairs = if args.pair.is_empty() {
                DEFAULT_PAIRS
                    .iter()
                    .map(|(a, b)| Pair::new(a, b))
                    .collect::<Result<Vec<_>, _>>()?
            } else {
                args.pair.iter().map(|p| Pair::parse(p)).collect::<Result<Vec<_>, _>>()?
            };
            let graphs = suite.load_graphs()?;
            let report = with_pool(args.jobs, || {
                run_dominance(&graphs, &pairs, &suite.alphas, suite.tol, &suite.invariants)
            })?;
            emit(&args.out, &report, &report.rows)?;
            for s in &report.summary {
                eprintln!(
                    "{} vs {}: compared {} first {} second {} tie {} n/a {}",
                    s.first, s.second, s.compared, s.first_tighter, s.second_tighter, s.ties, s.not_applicable
                );
            }
            Ok(0)
        }
        Command::Registry(out) => {
            emit(&out, &registry_dump(), &registry_rows())?;
            Ok(0)
        }
    }
}

/// Writes `whole` as JSON or `rows` as CSV.
fn emit<J: serde::Serialize, R: serde::Serialize>(out: &OutputArgs, whole: &J, rows: &[R]) -> Result<()> {
    let w = sink(out.output.as_deref()).context("opening output")?;
    match out.format {
        OutputFormat::Json => write_json(whole, w).context("writing JSON")?,
        OutputFormat::Csv => write_csv(rows, w).context("writing CSV")?,
    }
    Ok(())
}
