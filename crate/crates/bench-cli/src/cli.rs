//! Command-line parsing.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser};

use pss_core::objectives::{lookup, registry, Dims};

use crate::config::{Algorithm, ExperimentConfig, Format, SuccessRegion};

#[derive(Debug, Parser)]
#[command(
    name = "pss-bench",
    version,
    about = "Run replicate batches of the PSS optimizer on registered benchmark problems"
)]
struct Cli {
    /// Problem id or alias (see --list-problems)
    #[arg(long, required_unless_present = "list_problems")]
    problem: Option<String>,

    /// Number of variables; defaults to the problem's fixed dimensionality
    #[arg(long)]
    dims: Option<usize>,

    /// Acceptance probability in [0, 1]
    #[arg(long, default_value_t = 0.95, value_parser = parse_probability, allow_negative_numbers = true)]
    alpha: f64,

    /// Population size
    #[arg(long, default_value_t = 30)]
    pop: usize,

    /// Iteration budget (generations after the initial population)
    #[arg(long, required_unless_present = "list_problems")]
    iters: Option<usize>,

    /// Number of independent replicate runs
    #[arg(long, required_unless_present = "list_problems")]
    runs: Option<usize>,

    /// Base seed; run k uses a seed derived from (seed, k)
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Comma-separated iteration indices at which to record errors
    #[arg(long, value_delimiter = ',')]
    milestones: Vec<usize>,

    /// Output file (stdout if omitted)
    #[arg(long)]
    out: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Print the registered problems and exit
    #[arg(long)]
    list_problems: bool,

    /// Worker threads (default: number of processors)
    #[arg(long)]
    jobs: Option<usize>,

    #[arg(long, value_enum, default_value_t = Algorithm::Pss)]
    algorithm: Algorithm,

    /// Report the fraction of runs ending with every coordinate in [LOWER, UPPER]
    #[arg(long, num_args = 2, value_names = ["LOWER", "UPPER"], allow_negative_numbers = true)]
    success_region: Option<Vec<f64>>,
}

fn parse_probability(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if (0.0..=1.0).contains(&v) {
        Ok(v)
    } else {
        Err(format!("{v} is not a probability in [0, 1]"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    ListProblems,
    Run(ExperimentConfig),
}

/// Parses `argv` (including the program name).
pub fn parse_cli<I, T>(argv: I) -> Result<Command, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    if cli.list_problems {
        return Ok(Command::ListProblems);
    }
    let usage = |kind, msg: String| Cli::command().error(kind, msg);
    let problem = cli.problem.expect("required by clap");
    let dims = match cli.dims {
        Some(n) => n,
        None => {
            let spec =
                lookup(&problem).map_err(|e| usage(ErrorKind::InvalidValue, e.to_string()))?;
            spec.default_dims().ok_or_else(|| {
                usage(
                    ErrorKind::MissingRequiredArgument,
                    format!("--dims is required for {}", spec.id),
                )
            })?
        }
    };
    let success_region = cli.success_region.map(|v| SuccessRegion {
        lower: v[0],
        upper: v[1],
    });
    let config = ExperimentConfig {
        problem,
        dims,
        alpha: cli.alpha,
        beta: cli.pop,
        gamma: cli.iters.expect("required by clap"),
        replicates: cli.runs.expect("required by clap"),
        base_seed: cli.seed,
        milestones: cli.milestones,
        output: cli.out,
        format: cli.format,
        algorithm: cli.algorithm,
        success_region,
        jobs: cli.jobs,
    };
    config
        .validate()
        .map_err(|e| usage(ErrorKind::ValueValidation, e.to_string()))?;
    Ok(Command::Run(config))
}

/// One line per registered problem.
pub fn list_problems() -> String {
    let mut out = String::new();
    for spec in registry() {
        let dims = match spec.dims {
            Dims::Fixed(n) => format!("n={n}"),
            Dims::Any { min } => format!("n>={min}"),
        };
        let n = match spec.dims {
            Dims::Fixed(n) => n,
            Dims::Any { min } => min.max(2),
        };
        let optimum = spec.true_optimum(n).map_or_else(
            |_| "-".to_string(),
            |v| {
                if v != 0.0 && v.abs() < 1e-3 {
                    format!("{v:e}")
                } else {
                    format!("{v}")
                }
            },
        );
        let _ = writeln!(
            out,
            "{:<18} {:<5} {:<6} f*(n={n})={:<14} {}",
            spec.id,
            spec.alias.unwrap_or("-"),
            dims,
            optimum,
            spec.title
        );
    }
    out
}
