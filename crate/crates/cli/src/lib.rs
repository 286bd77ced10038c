//! Commands behind the `privgraph` binary: synthesize, evaluate, benchmark
//! and the influence-maximization case study.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use anyhow::{anyhow, Context, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use privgraph::dp::{Ledger, Verdict};
use privgraph::graph::{align_to, load_edge_list, write_edge_list};
use privgraph::im::{degree_discount, ic_spread, SpreadEstimate};
use privgraph::metrics::{evaluate, MetricOptions};
use privgraph::tmf::tmf_synthesize;
use privgraph::{synthesize, Graph, LabelMap, Method, MetricsReport, RandomSource, SynthesisConfig};

/// Writes through a temporary sibling file and renames it into place.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d.to_path_buf(),
        _ => PathBuf::from("."),
    };
    let name = path
        .file_name()
        .ok_or_else(|| anyhow!("output path {} has no file name", path.display()))?;
    let tmp = dir.join(format!(".{}.tmp-{}", name.to_string_lossy(), std::process::id()));
    let result = (|| -> std::io::Result<()> {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents)?;
        f.sync_all()?;
        fs::rename(&tmp, path)
    })();
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result.with_context(|| format!("cannot write {}", path.display()))
}

pub fn load_graph(path: &Path) -> Result<(Graph, LabelMap)> {
    load_edge_list(path).with_context(|| format!("cannot read graph {}", path.display()))
}

/// Loads two edge lists over the same node labels, the second re-indexed to
/// match the first.
pub fn load_pair(original: &Path, synthetic: &Path) -> Result<(Graph, LabelMap, Graph)> {
    let (g, labels) = load_graph(original)?;
    let (s, s_labels) = load_graph(synthetic)?;
    let s = align_to(&labels, &s, &s_labels)
        .with_context(|| format!("{} and {} do not share a node set", original.display(), synthetic.display()))?;
    Ok((g, labels, s))
}

/// The audit trail written next to every synthetic graph.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LedgerReport {
    pub method: Method,
    pub epsilon: f64,
    pub passed: bool,
    pub ledger: Ledger,
    pub verdict: Verdict,
}

pub struct Synthesis {
    pub graph: Graph,
    pub report: LedgerReport,
}

/// Runs the configured method once on an in-memory graph.
pub fn run_method(g: &Graph, config: &SynthesisConfig, rng: &mut RandomSource) -> Result<Synthesis> {
    config.validate()?;
    let (graph, ledger, verdict) = match config.method {
        Method::Privgraph => {
            let out = synthesize(g, &config.privgraph_params()?, &config.budget()?, rng)?;
            (out.graph, out.ledger, out.verdict)
        }
        Method::Tmf => {
            let out = tmf_synthesize(g, config.epsilon, &config.tmf_params()?, rng)?;
            (out.graph, out.ledger, out.verdict)
        }
    };
    Ok(Synthesis {
        graph,
        report: LedgerReport {
            method: config.method,
            epsilon: config.epsilon,
            passed: verdict.passed(),
            ledger,
            verdict,
        },
    })
}

pub fn cmd_synthesize(input: &Path, output: &Path, ledger: &Path, config: &SynthesisConfig) -> Result<LedgerReport> {
    let (g, labels) = load_graph(input)?;
    let mut rng = RandomSource::from_option(config.seed);
    let out = run_method(&g, config, &mut rng)?;
    write_atomic(output, write_edge_list(&out.graph, &labels).as_bytes())?;
    let json = serde_json::to_string_pretty(&out.report)?;
    write_atomic(ledger, json.as_bytes())?;
    Ok(out.report)
}

pub fn cmd_evaluate(original: &Path, synthetic: &Path, options: &MetricOptions) -> Result<MetricsReport> {
    let (g, _, s) = load_pair(original, synthetic)?;
    Ok(evaluate(&g, &s, options)?)
}

pub fn metrics_csv(report: &MetricsReport) -> String {
    format!("{}\n{}\n", MetricsReport::csv_header(), report.csv_row())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Repetition {
    pub method: Method,
    pub epsilon: f64,
    pub rep: usize,
    pub seed: u64,
    pub seconds: f64,
    pub metrics: MetricsReport,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Aggregate {
    pub method: Method,
    pub epsilon: f64,
    pub reps: usize,
    pub mean: [f64; 7],
    pub std: [f64; 7],
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunRecord {
    pub config: SynthesisConfig,
    pub epsilons: Vec<f64>,
    pub methods: Vec<Method>,
    pub repetitions: Vec<Repetition>,
    pub aggregates: Vec<Aggregate>,
    pub wall_clock_seconds: f64,
    pub timestamp_unix: u64,
}

pub fn method_name(m: Method) -> &'static str {
    match m {
        Method::Privgraph => "privgraph",
        Method::Tmf => "tmf",
    }
}

/// Mean and sample standard deviation (0 for a single value).
pub fn mean_std(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

fn aggregate(method: Method, epsilon: f64, reps: &[&Repetition]) -> Aggregate {
    let mut mean = [0.0; 7];
    let mut std = [0.0; 7];
    for i in 0..7 {
        let column: Vec<f64> = reps.iter().map(|r| r.metrics.values()[i]).collect();
        (mean[i], std[i]) = mean_std(&column);
    }
    Aggregate {
        method,
        epsilon,
        reps: reps.len(),
        mean,
        std,
    }
}

pub fn benchmark_csv(record: &RunRecord) -> String {
    let mut header = vec!["method".to_owned(), "epsilon".to_owned(), "reps".to_owned()];
    for c in MetricsReport::CSV_COLUMNS {
        header.push(format!("{c}_mean"));
        header.push(format!("{c}_std"));
    }
    let mut out = header.join(",") + "\n";
    for a in &record.aggregates {
        let mut row = vec![method_name(a.method).to_owned(), a.epsilon.to_string(), a.reps.to_string()];
        for i in 0..7 {
            row.push(a.mean[i].to_string());
            row.push(a.std[i].to_string());
        }
        out += &(row.join(",") + "\n");
    }
    out
}

pub fn repetitions_csv(record: &RunRecord) -> String {
    let mut out = format!("method,epsilon,rep,seed,{}\n", MetricsReport::csv_header());
    for r in &record.repetitions {
        out += &format!(
            "{},{},{},{},{}\n",
            method_name(r.method),
            r.epsilon,
            r.rep,
            r.seed,
            r.metrics.csv_row()
        );
    }
    out
}

/// Every method at every epsilon, `reps` times each. Repetition `i` is
/// seeded with `seed + i`; repetitions run in parallel on the current rayon
/// pool, yet the record does not depend on scheduling.
pub fn run_benchmark(
    g: &Graph,
    config: &SynthesisConfig,
    methods: &[Method],
    epsilons: &[f64],
    reps: usize,
    options: &MetricOptions,
) -> Result<RunRecord> {
    if reps == 0 {
        return Err(privgraph::Error::Config("at least one repetition is required".into()).into());
    }
    let started = Instant::now();
    let base = config.seed.unwrap_or_else(|| RandomSource::from_entropy().next_u64());
    let mut jobs = Vec::new();
    for &method in methods {
        for &epsilon in epsilons {
            let c = SynthesisConfig {
                method,
                epsilon,
                ..config.clone()
            };
            c.validate()?;
            for rep in 0..reps {
                jobs.push((c.clone(), rep));
            }
        }
    }
    let repetitions = jobs
        .into_par_iter()
        .map(|(c, rep)| -> Result<Repetition> {
            let seed = base.wrapping_add(rep as u64);
            let t0 = Instant::now();
            let out = run_method(g, &c, &mut RandomSource::seeded(seed))?;
            let seconds = t0.elapsed().as_secs_f64();
            let metrics = evaluate(g, &out.graph, options)?;
            Ok(Repetition {
                method: c.method,
                epsilon: c.epsilon,
                rep,
                seed,
                seconds,
                metrics,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut aggregates = Vec::new();
    for &method in methods {
        for &epsilon in epsilons {
            let group: Vec<&Repetition> = repetitions
                .iter()
                .filter(|r| r.method == method && r.epsilon == epsilon)
                .collect();
            aggregates.push(aggregate(method, epsilon, &group));
        }
    }
    Ok(RunRecord {
        config: config.clone(),
        epsilons: epsilons.to_vec(),
        methods: methods.to_vec(),
        repetitions,
        aggregates,
        wall_clock_seconds: started.elapsed().as_secs_f64(),
        timestamp_unix: SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()),
    })
}

pub struct BenchmarkOutputs<'a> {
    pub summary_csv: &'a Path,
    pub repetitions_csv: Option<&'a Path>,
    pub record_json: Option<&'a Path>,
}

pub fn cmd_benchmark(
    input: &Path,
    config: &SynthesisConfig,
    methods: &[Method],
    epsilons: &[f64],
    reps: usize,
    options: &MetricOptions,
    outputs: &BenchmarkOutputs,
) -> Result<RunRecord> {
    let (g, _) = load_graph(input)?;
    let record = run_benchmark(&g, config, methods, epsilons, reps, options)?;
    write_atomic(outputs.summary_csv, benchmark_csv(&record).as_bytes())?;
    if let Some(path) = outputs.repetitions_csv {
        write_atomic(path, repetitions_csv(&record).as_bytes())?;
    }
    if let Some(path) = outputs.record_json {
        write_atomic(path, serde_json::to_string_pretty(&record)?.as_bytes())?;
    }
    Ok(record)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ImResult {
    pub k: usize,
    pub p: f64,
    pub seeds: Vec<String>,
    pub spread: SpreadEstimate,
}

/// Seeds picked on the synthetic graph, spread measured on the original.
pub fn cmd_im(original: &Path, synthetic: &Path, k: usize, p: f64, trials: usize, seed: Option<u64>) -> Result<ImResult> {
    let (g, labels, s) = load_pair(original, synthetic)?;
    let seeds = degree_discount(&s, k, p)?;
    let spread = ic_spread(&g, &seeds, p, trials, &mut RandomSource::from_option(seed))?;
    Ok(ImResult {
        k,
        p,
        seeds: seeds.iter().map(|&u| labels.label(u).to_owned()).collect(),
        spread,
    })
}

pub fn im_csv(result: &ImResult) -> String {
    format!(
        "k,p,trials,spread_mean,spread_std,seeds\n{},{},{},{},{},{}\n",
        result.k,
        result.p,
        result.spread.trials,
        result.spread.mean,
        result.spread.std,
        result.seeds.join(" ")
    )
}
