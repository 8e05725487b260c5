use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use peelcore::cli::{
    cmd_bench, cmd_compare, cmd_decompose, cmd_verify, parse_methods, parse_random_spec,
    BenchConfig, RunConfig, VerifyOutcome,
};
use peelcore::generators::{SampleSpec, DEFAULT_EXHAUSTIVE_CAP};
use peelcore::{Error, Result};

#[derive(Parser)]
#[command(
    name = "peelcore",
    version,
    about = "k-core, triangle k-core and vertex triangle k-core experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose one SNAP edge-list graph.
    Decompose(RunArgs),
    /// Average decomposition metrics over a graph population.
    Compare(RunArgs),
    /// Check the decompositions against the brute-force oracle.
    Verify(RunArgs),
    /// Time the decompositions on random graphs and fit growth exponents.
    Bench(BenchArgs),
}

#[derive(Args)]
struct RunArgs {
    /// SNAP edge-list file.
    #[arg(long, conflicts_with_all = ["exhaustive", "random"])]
    input: Option<PathBuf>,
    /// Every labeled graph on N vertices.
    #[arg(long, value_name = "N", conflicts_with = "random")]
    exhaustive: Option<usize>,
    /// COUNT random G(N, P) graphs.
    #[arg(long, value_name = "N,P,COUNT")]
    random: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "kcore,tricore,vtricore")]
    methods: String,
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Only emit curve points for non-empty levels.
    #[arg(long)]
    distinct: bool,
    /// Check every graph against the oracle while comparing.
    #[arg(long)]
    oracle_verify: bool,
    /// Raise the exhaustive enumeration cap (at most 7).
    #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_CAP)]
    cap: usize,
}

impl RunArgs {
    fn config(&self) -> Result<RunConfig> {
        let source = match (&self.input, self.exhaustive, &self.random) {
            (Some(path), None, None) => SampleSpec::File(path.clone()),
            (None, Some(n), None) => SampleSpec::Exhaustive { n, cap: self.cap },
            (None, None, Some(text)) => parse_random_spec(text, self.seed)?,
            _ => {
                return Err(Error::Precondition(
                    "give exactly one of --input, --exhaustive, --random".into(),
                ))
            }
        };
        Ok(RunConfig {
            methods: parse_methods(&self.methods)?,
            distinct: self.distinct,
            oracle_verify: self.oracle_verify,
            ..RunConfig::new(source, &self.out)
        })
    }
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 10)]
    n_min: usize,
    #[arg(long, default_value_t = 40)]
    n_max: usize,
    #[arg(long, default_value_t = 1)]
    n_step: usize,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "kcore,tricore,vtricore")]
    methods: String,
    #[arg(long, default_value = "bench-out")]
    out: PathBuf,
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Decompose(args) => {
            for path in cmd_decompose(&args.config()?)? {
                println!("{}", path.display());
            }
        }
        Command::Compare(args) => {
            let summary = cmd_compare(&args.config()?)?;
            println!("{} graphs", summary.graphs);
            for m in &summary.means {
                println!(
                    "{:<16} best level size {:.4}  level number {:.4}  rms {:.4}",
                    m.method.to_string(),
                    m.best_level_size,
                    m.level_number,
                    m.rms
                );
            }
        }
        Command::Verify(args) => {
            let summary = cmd_verify(&args.config()?)?;
            match summary.outcome {
                VerifyOutcome::Pass => println!(
                    "pass: {} graphs agree with the oracle",
                    summary.graphs_checked
                ),
                VerifyOutcome::Fail {
                    method,
                    graph_id,
                    detail,
                    edges,
                    reproduce,
                } => {
                    eprintln!("FAIL {method} on graph {graph_id}: {detail}");
                    eprintln!("edges: {edges:?}");
                    eprintln!("reproduce: {reproduce}");
                    return Ok(ExitCode::from(4));
                }
            }
        }
        Command::Bench(args) => {
            if args.n_step == 0 || args.n_min > args.n_max {
                return Err(Error::Precondition(
                    "invalid --n-min/--n-max/--n-step range".into(),
                ));
            }
            let summary = cmd_bench(&BenchConfig {
                n_values: (args.n_min..=args.n_max).step_by(args.n_step).collect(),
                samples: args.samples,
                p: args.p,
                seed: args.seed,
                methods: parse_methods(&args.methods)?,
                out_dir: args.out,
            })?;
            for fit in summary.fits.iter().flatten() {
                println!(
                    "{:<16} exponent {:.3} over {} sizes",
                    fit.method.to_string(),
                    fit.exponent,
                    fit.points
                );
            }
            for path in &summary.written {
                println!("{}", path.display());
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
