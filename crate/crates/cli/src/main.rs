use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use privgraph::im::{DEFAULT_PROPAGATION, DEFAULT_TRIALS};
use privgraph::metrics::{ClusteringKind, MetricOptions};
use privgraph::{InterSampling, Method, NormSubScope, SynthesisConfig};
use privgraph_cli::{
    cmd_benchmark, cmd_evaluate, cmd_im, cmd_synthesize, im_csv, metrics_csv, write_atomic, BenchmarkOutputs,
};

#[derive(Parser)]
#[command(name = "privgraph", version, about = "Differentially private synthetic graph publication")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Publish a synthetic graph and its privacy ledger.
    Synthesize {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        /// Ledger JSON path; defaults to `<output>.ledger.json`.
        #[arg(long)]
        ledger: Option<PathBuf>,
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// Compare a synthetic graph against the original.
    Evaluate {
        #[arg(long)]
        original: PathBuf,
        #[arg(long)]
        synthetic: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[command(flatten)]
        metrics: MetricArgs,
    },
    /// Repeated synthesis and evaluation over a grid of budgets.
    Benchmark {
        #[arg(long)]
        input: PathBuf,
        /// Summary CSV, one row per method and epsilon.
        #[arg(long)]
        output: PathBuf,
        /// Per-repetition CSV.
        #[arg(long)]
        runs: Option<PathBuf>,
        /// Full run record as JSON, including timings.
        #[arg(long)]
        record: Option<PathBuf>,
        #[arg(long, default_value_t = 10)]
        reps: usize,
        #[arg(long, value_delimiter = ',', default_values_t = [0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5])]
        epsilons: Vec<f64>,
        #[arg(long, value_delimiter = ',', default_values = ["privgraph", "tmf"])]
        methods: Vec<MethodArg>,
        #[command(flatten)]
        config: ConfigArgs,
        #[command(flatten)]
        metrics: MetricArgs,
    },
    /// Influence maximization: seeds from the synthetic graph, spread on the original.
    Im {
        #[arg(long)]
        original: PathBuf,
        #[arg(long)]
        synthetic: PathBuf,
        #[arg(long, default_value_t = 20)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_PROPAGATION)]
        p: f64,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Privgraph,
    Tmf,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Privgraph => Method::Privgraph,
            MethodArg::Tmf => Method::Tmf,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    Global,
    PerCommunity,
}

#[derive(Clone, Copy, ValueEnum)]
enum SamplingArg {
    Bernoulli,
    ExactCount,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClusteringArg {
    Global,
    AverageLocal,
}

/// Flags override values from `--config`.
#[derive(Args)]
struct ConfigArgs {
    /// TOML file with any subset of the configuration keys.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    method: Option<MethodArg>,
    #[arg(long)]
    epsilon: Option<f64>,
    /// Three fractions for initialization, adjustment and extraction.
    #[arg(long, value_delimiter = ',', num_args = 3)]
    split: Option<Vec<f64>>,
    #[arg(long)]
    block_size: Option<usize>,
    #[arg(long)]
    resolution: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    norm_sub_scope: Option<ScopeArg>,
    #[arg(long)]
    inter_sampling: Option<SamplingArg>,
    #[arg(long)]
    tmf_count_fraction: Option<f64>,
}

impl ConfigArgs {
    fn resolve(&self) -> Result<SynthesisConfig> {
        let mut c = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("cannot read config {}", path.display()))?;
                SynthesisConfig::from_toml(&text).with_context(|| format!("in config {}", path.display()))?
            }
            None => SynthesisConfig::default(),
        };
        if let Some(m) = self.method {
            c.method = m.into();
        }
        if let Some(e) = self.epsilon {
            c.epsilon = e;
        }
        if let Some(s) = &self.split {
            c.budget_split = [s[0], s[1], s[2]];
        }
        if let Some(n) = self.block_size {
            c.block_size = n;
        }
        if let Some(t) = self.resolution {
            c.resolution = t;
        }
        if self.seed.is_some() {
            c.seed = self.seed;
        }
        if let Some(s) = self.norm_sub_scope {
            c.norm_sub_scope = match s {
                ScopeArg::Global => NormSubScope::Global,
                ScopeArg::PerCommunity => NormSubScope::PerCommunity,
            };
        }
        if let Some(s) = self.inter_sampling {
            c.inter_sampling = match s {
                SamplingArg::Bernoulli => InterSampling::Bernoulli,
                SamplingArg::ExactCount => InterSampling::ExactCount,
            };
        }
        if let Some(f) = self.tmf_count_fraction {
            c.tmf_count_fraction = f;
        }
        c.validate()?;
        Ok(c)
    }
}

#[derive(Args)]
struct MetricArgs {
    #[arg(long, default_value_t = 0.01)]
    evc_fraction: f64,
    #[arg(long, value_enum, default_value_t = ClusteringArg::Global)]
    clustering: ClusteringArg,
    #[arg(long, default_value_t = 0)]
    louvain_seed: u64,
}

impl MetricArgs {
    fn options(&self) -> MetricOptions {
        MetricOptions {
            evc_fraction: self.evc_fraction,
            clustering: match self.clustering {
                ClusteringArg::Global => ClusteringKind::Global,
                ClusteringArg::AverageLocal => ClusteringKind::AverageLocal,
            },
            louvain_seed: self.louvain_seed,
        }
    }
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => write_atomic(p, text.as_bytes()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn configure_threads() -> Result<()> {
    if let Ok(value) = std::env::var("PRIVGRAPH_THREADS") {
        let threads: usize = value
            .parse()
            .map_err(|_| privgraph::Error::Config(format!("PRIVGRAPH_THREADS must be a count, got `{value}`")))?;
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    configure_threads()?;
    match cli.command {
        Command::Synthesize {
            input,
            output,
            ledger,
            config,
        } => {
            let config = config.resolve()?;
            let ledger = ledger.unwrap_or_else(|| {
                let mut name = output.clone().into_os_string();
                name.push(".ledger.json");
                PathBuf::from(name)
            });
            let report = cmd_synthesize(&input, &output, &ledger, &config)?;
            eprintln!(
                "wrote {} and {} (epsilon spent {})",
                output.display(),
                ledger.display(),
                report.verdict.total_spent
            );
        }
        Command::Evaluate {
            original,
            synthetic,
            json,
            csv,
            metrics,
        } => {
            let report = cmd_evaluate(&original, &synthetic, &metrics.options())?;
            if let Some(path) = &csv {
                write_atomic(path, metrics_csv(&report).as_bytes())?;
            }
            let text = report.to_json() + "\n";
            if json.is_some() || csv.is_none() {
                emit(json.as_deref(), &text)?;
            }
        }
        Command::Benchmark {
            input,
            output,
            runs,
            record,
            reps,
            epsilons,
            methods,
            config,
            metrics,
        } => {
            let config = config.resolve()?;
            let methods: Vec<Method> = methods.into_iter().map(Method::from).collect();
            let outputs = BenchmarkOutputs {
                summary_csv: &output,
                repetitions_csv: runs.as_deref(),
                record_json: record.as_deref(),
            };
            let record = cmd_benchmark(&input, &config, &methods, &epsilons, reps, &metrics.options(), &outputs)?;
            eprintln!(
                "{} runs in {:.1} s, summary in {}",
                record.repetitions.len(),
                record.wall_clock_seconds,
                output.display()
            );
        }
        Command::Im {
            original,
            synthetic,
            k,
            p,
            trials,
            seed,
            output,
        } => {
            let result = cmd_im(&original, &synthetic, k, p, trials, seed)?;
            emit(output.as_deref(), &im_csv(&result))?;
        }
    }
    Ok(())
}

/// 1 for internal failures (a violated budget included), 2 for bad input.
fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<privgraph::Error>() {
        Some(privgraph::Error::BudgetViolation(_)) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match std::panic::catch_unwind(|| run(cli)) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(err)) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
        Err(_) => ExitCode::from(1),
    }
}
