//! Experiment runs behind the `peelcore` binary.
//!
//! Each command reads a graph or a graph population, runs the selected
//! methods, and writes CSV files named `<method>.<artifact>.csv` into the
//! output directory together with a `manifest.json` echoing the run
//! configuration. With a fixed seed and input, every CSV except the timing
//! tables is byte-identical across runs.

use std::fs::{self, File};
use std::io::BufWriter;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde_json::json;

use crate::bench::{
    complexity_check, time_methods_for, write_exponents_csv, write_timing_csv, ExponentFit,
    TimingTable,
};
use crate::decompose::{
    decompose, oracle_core_numbers, oracle_edge_levels, triangle_core_decompose, CoreAssignment,
    Method, DEFAULT_ORACLE_CAP,
};
use crate::error::{Error, Result};
use crate::generators::{sample_stream, SampleSpec};
use crate::graph::{Graph, Label};
use crate::metrics::{report, DecompositionReport, MeanAggregator, MeanReport};
use crate::output::{
    file_stem, write_core_assignment, write_curves, write_edge_levels, write_mean_curves,
    write_mean_reports, write_reports, CurveWriter, ReportWriter,
};
use crate::snap::read_snap_file;

/// Graphs evaluated in parallel per batch; results are consumed in order.
const BATCH: usize = 2048;

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub source: SampleSpec,
    pub methods: Vec<Method>,
    pub out_dir: PathBuf,
    /// Emit distinct-level curves (only `k` with a non-empty level).
    pub distinct: bool,
    /// Check every graph against the brute-force oracle while comparing.
    pub oracle_verify: bool,
}

impl RunConfig {
    pub fn new(source: SampleSpec, out_dir: impl Into<PathBuf>) -> Self {
        RunConfig {
            source,
            methods: Method::PEELING.to_vec(),
            out_dir: out_dir.into(),
            distinct: false,
            oracle_verify: false,
        }
    }

    fn check_methods(&self) -> Result<()> {
        if self.methods.is_empty() {
            return Err(Error::precondition("select at least one method"));
        }
        Ok(())
    }

    fn manifest(&self, command: &str) -> serde_json::Value {
        json!({
            "tool": "peelcore",
            "version": env!("CARGO_PKG_VERSION"),
            "command": command,
            "source": source_json(&self.source),
            "methods": self.methods.iter().map(Method::to_string).collect::<Vec<_>>(),
            "distinct": self.distinct,
            "oracle_verify": self.oracle_verify,
        })
    }
}

fn source_json(spec: &SampleSpec) -> serde_json::Value {
    match spec {
        SampleSpec::Exhaustive { n, cap } => json!({"kind": "exhaustive", "n": n, "cap": cap}),
        SampleSpec::Random { n, p, count, seed } => {
            json!({"kind": "random", "n": n, "p": p, "count": count, "seed": seed})
        }
        SampleSpec::File(path) => json!({"kind": "file", "path": path.display().to_string()}),
    }
}

/// Parses `N,P,COUNT` as given to `--random`.
pub fn parse_random_spec(text: &str, seed: u64) -> Result<SampleSpec> {
    let bad = || Error::precondition(format!("--random expects N,P,COUNT, got {text:?}"));
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [n, p, count] = parts.as_slice() else {
        return Err(bad());
    };
    let spec = SampleSpec::Random {
        n: n.parse().map_err(|_| bad())?,
        p: p.parse().map_err(|_| bad())?,
        count: count.parse().map_err(|_| bad())?,
        seed,
    };
    spec.validate()?;
    Ok(spec)
}

/// Parses a comma-separated method list such as `kcore,tricore,pcore:degree`.
pub fn parse_methods(text: &str) -> Result<Vec<Method>> {
    let methods = text
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect::<Result<Vec<Method>>>()?;
    if methods.is_empty() {
        return Err(Error::precondition("select at least one method"));
    }
    Ok(methods)
}

fn create_out_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Error::io(path, e))
}

fn write_manifest(dir: &Path, manifest: &serde_json::Value) -> Result<PathBuf> {
    let path = dir.join("manifest.json");
    let mut text = serde_json::to_string_pretty(manifest)?;
    text.push('\n');
    fs::write(&path, text).map_err(|e| Error::io(&path, e))?;
    Ok(path)
}

/// Decomposes one SNAP graph with every selected method.
///
/// Writes `<method>.cores.csv`, `<method>.report.csv` and
/// `<method>.curve.csv` per method, `tricore.edges.csv` when the triangle
/// core is selected, and the manifest. Returns the written paths.
pub fn cmd_decompose(config: &RunConfig) -> Result<Vec<PathBuf>> {
    config.check_methods()?;
    let SampleSpec::File(input) = &config.source else {
        return Err(Error::precondition(
            "decompose reads a single graph file (--input)",
        ));
    };
    let pairs = read_snap_file(input)?;
    if pairs.is_empty() {
        return Err(Error::Parse {
            line: 0,
            message: format!("{} contains no edges", input.display()),
        });
    }
    let g = Graph::from_edge_list(pairs);
    let dir = &config.out_dir;
    create_out_dir(dir)?;
    let mut written = Vec::new();

    for method in &config.methods {
        let stem = file_stem(method);
        let assignment = if *method == Method::TriangleCore {
            let (cores, levels) = triangle_core_decompose(&g);
            let path = dir.join(format!("{stem}.edges.csv"));
            write_edge_levels(&g, &levels, create(&path)?)?;
            written.push(path);
            cores
        } else {
            decompose(&g, method)?
        };

        let path = dir.join(format!("{stem}.cores.csv"));
        write_core_assignment(&g, &assignment, create(&path)?)?;
        written.push(path);

        let r = report(&g, &assignment)?;
        let path = dir.join(format!("{stem}.report.csv"));
        write_reports([(0, &r)], create(&path)?)?;
        written.push(path);

        let path = dir.join(format!("{stem}.curve.csv"));
        write_curves([(0, &r)], config.distinct, create(&path)?)?;
        written.push(path);
    }
    let mut manifest = config.manifest("decompose");
    manifest["vertices"] = json!(g.vertex_count());
    manifest["edges"] = json!(g.edge_count());
    written.push(write_manifest(dir, &manifest)?);
    Ok(written)
}

/// The oracle method that checks `method`, if any.
fn oracle_method(method: &Method) -> Option<Method> {
    match method {
        Method::PCore(name) if name == "degree" => Some(Method::KCore),
        Method::PCore(name) if name == "triangles" => Some(Method::VertexTriangleCore),
        Method::PCore(_) => None,
        m => Some(m.clone()),
    }
}

fn check_against_oracle(
    g: &Graph,
    method: &Method,
    got: &CoreAssignment,
) -> Result<Option<String>> {
    let Some(oracle) = oracle_method(method) else {
        return Err(Error::precondition(format!("no oracle for {method}")));
    };
    let expected = oracle_core_numbers(g, &oracle)?;
    if expected.core_numbers() != got.core_numbers() {
        return Ok(Some(format!(
            "{method}: core numbers {:?}, oracle says {:?}",
            got.core_numbers(),
            expected.core_numbers()
        )));
    }
    if *method == Method::TriangleCore {
        let (_, levels) = triangle_core_decompose(g);
        if levels != oracle_edge_levels(g)? {
            return Ok(Some(format!(
                "{method}: edge levels differ from the oracle"
            )));
        }
    }
    Ok(None)
}

struct GraphResult {
    id: u64,
    reports: Vec<DecompositionReport>,
}

fn evaluate_batch(batch: &[(u64, Graph)], config: &RunConfig) -> Result<Vec<GraphResult>> {
    batch
        .par_iter()
        .map(|(id, g)| {
            let mut reports = Vec::with_capacity(config.methods.len());
            for method in &config.methods {
                let a = decompose(g, method)?;
                if config.oracle_verify {
                    if let Some(why) = check_against_oracle(g, method, &a)? {
                        return Err(Error::Verification(format!("graph {id}: {why}")));
                    }
                }
                reports.push(report(g, &a)?);
            }
            Ok(GraphResult { id: *id, reports })
        })
        .collect()
}

/// Per-method means of a compare run, as returned by [`cmd_compare`].
#[derive(Clone, Debug)]
pub struct CompareSummary {
    pub graphs: u64,
    pub means: Vec<MeanReport>,
    pub written: Vec<PathBuf>,
}

/// Runs every selected method over a population and writes per-graph
/// reports and curves, per-method means, and mean curves.
///
/// Files: `<method>.reports.csv`, `<method>.curves.csv`, `<method>.means.csv`,
/// `<method>.mean_curve.csv`, plus `all.means.csv` and the manifest.
pub fn cmd_compare(config: &RunConfig) -> Result<CompareSummary> {
    config.check_methods()?;
    let stream = sample_stream(&config.source)?;
    let dir = &config.out_dir;
    create_out_dir(dir)?;

    let mut report_writers = Vec::new();
    let mut curve_writers = Vec::new();
    let mut written = Vec::new();
    for method in &config.methods {
        let stem = file_stem(method);
        let path = dir.join(format!("{stem}.reports.csv"));
        report_writers.push(ReportWriter::new(create(&path)?));
        written.push(path);
        let path = dir.join(format!("{stem}.curves.csv"));
        curve_writers.push(CurveWriter::new(create(&path)?, config.distinct)?);
        written.push(path);
    }

    let mut aggregator = MeanAggregator::new();
    let mut graphs = 0u64;
    let mut batch = Vec::with_capacity(BATCH);
    let mut stream = stream.peekable();
    while stream.peek().is_some() {
        batch.clear();
        batch.extend(stream.by_ref().take(BATCH));
        for result in evaluate_batch(&batch, config)? {
            graphs += 1;
            for (i, r) in result.reports.iter().enumerate() {
                aggregator.add(r);
                report_writers[i].append(result.id, r)?;
                curve_writers[i].append(result.id, r)?;
            }
        }
    }
    for w in report_writers {
        w.finish()?;
    }
    for w in curve_writers {
        w.finish()?;
    }

    let means = aggregator.finish()?;
    for m in &means {
        let stem = file_stem(&m.method);
        let path = dir.join(format!("{stem}.means.csv"));
        write_mean_reports(std::slice::from_ref(m), create(&path)?)?;
        written.push(path);
        let path = dir.join(format!("{stem}.mean_curve.csv"));
        write_mean_curves(std::slice::from_ref(m), config.distinct, create(&path)?)?;
        written.push(path);
    }
    let path = dir.join("all.means.csv");
    write_mean_reports(&means, create(&path)?)?;
    written.push(path);

    let mut manifest = config.manifest("compare");
    manifest["graphs"] = json!(graphs);
    written.push(write_manifest(dir, &manifest)?);
    Ok(CompareSummary {
        graphs,
        means,
        written,
    })
}

/// Outcome of a verification run.
#[derive(Clone, Debug, PartialEq)]
pub enum VerifyOutcome {
    Pass,
    Fail {
        method: Method,
        graph_id: u64,
        detail: String,
        /// The failing graph as labeled edges.
        edges: Vec<(Label, Label)>,
        /// Command line that reproduces the failing population.
        reproduce: String,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifySummary {
    pub graphs_checked: u64,
    pub outcome: VerifyOutcome,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.outcome == VerifyOutcome::Pass
    }
}

/// Compares every selected method against the brute-force oracle over the
/// configured population, stopping at the first disagreement.
pub fn cmd_verify(config: &RunConfig) -> Result<VerifySummary> {
    verify_with(config, decompose)
}

/// [`cmd_verify`] with the decomposition under test supplied by the caller.
pub fn verify_with<F>(config: &RunConfig, decomposer: F) -> Result<VerifySummary>
where
    F: Fn(&Graph, &Method) -> Result<CoreAssignment> + Sync,
{
    config.check_methods()?;
    if let Some(n) = config.source.max_vertices() {
        if n > DEFAULT_ORACLE_CAP {
            return Err(Error::precondition(format!(
                "verification is limited to {DEFAULT_ORACLE_CAP} vertices, population has {n}"
            )));
        }
    }
    for method in &config.methods {
        if oracle_method(method).is_none() {
            return Err(Error::precondition(format!("no oracle for {method}")));
        }
    }
    let mut stream = sample_stream(&config.source)?.peekable();
    let mut checked = 0u64;
    let mut batch: Vec<(u64, Graph)> = Vec::with_capacity(BATCH);
    while stream.peek().is_some() {
        batch.clear();
        batch.extend(stream.by_ref().take(BATCH));
        let verdicts: Vec<Option<(Method, String)>> = batch
            .par_iter()
            .map(|(_, g)| {
                for method in &config.methods {
                    let got = decomposer(g, method)?;
                    if let Some(why) = check_against_oracle(g, method, &got)? {
                        return Ok(Some((method.clone(), why)));
                    }
                }
                Ok(None)
            })
            .collect::<Result<_>>()?;
        for ((id, g), verdict) in batch.iter().zip(verdicts) {
            checked += 1;
            if let Some((method, detail)) = verdict {
                return Ok(VerifySummary {
                    graphs_checked: checked,
                    outcome: VerifyOutcome::Fail {
                        reproduce: reproduce_line(&config.source, &method, *id),
                        method,
                        graph_id: *id,
                        detail,
                        edges: g.to_edge_list(),
                    },
                });
            }
        }
    }
    Ok(VerifySummary {
        graphs_checked: checked,
        outcome: VerifyOutcome::Pass,
    })
}

fn reproduce_line(spec: &SampleSpec, method: &Method, id: u64) -> String {
    match spec {
        SampleSpec::Exhaustive { n, cap } => {
            format!("peelcore verify --exhaustive {n} --cap {cap} --methods {method}  # graph id {id}")
        }
        SampleSpec::Random { n, p, count, seed } => format!(
            "peelcore verify --random {n},{p},{count} --seed {seed} --methods {method}  # graph id {id} (seed {})",
            seed.wrapping_add(id)
        ),
        SampleSpec::File(path) => {
            format!("peelcore verify --input {} --methods {method}", path.display())
        }
    }
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub n_values: Vec<usize>,
    pub samples: usize,
    pub p: f64,
    pub seed: u64,
    pub methods: Vec<Method>,
    pub out_dir: PathBuf,
}

#[derive(Clone, Debug)]
pub struct BenchSummary {
    pub table: TimingTable,
    /// `None` when fewer than 4 sizes were measured.
    pub fits: Option<Vec<ExponentFit>>,
    pub written: Vec<PathBuf>,
}

/// Times the selected methods and writes `timing.csv`, `exponents.csv`
/// (when at least 4 sizes are measured) and the manifest.
pub fn cmd_bench(config: &BenchConfig) -> Result<BenchSummary> {
    if config.samples == 0 {
        return Err(Error::precondition("--samples must be at least 1"));
    }
    if config.n_values.is_empty() || config.n_values.contains(&0) {
        return Err(Error::precondition(
            "benchmark sizes must be a non-empty list of n >= 1",
        ));
    }
    let table = time_methods_for(
        &config.n_values,
        config.samples,
        config.p,
        config.seed,
        &config.methods,
    )?;
    let dir = &config.out_dir;
    create_out_dir(dir)?;
    let mut written = Vec::new();
    let path = dir.join("timing.csv");
    write_timing_csv(&table, create(&path)?)?;
    written.push(path);

    let mut distinct_n = config.n_values.clone();
    distinct_n.sort_unstable();
    distinct_n.dedup();
    let fits = if distinct_n.len() >= 4 {
        let fits = complexity_check(&table)?;
        let path = dir.join("exponents.csv");
        write_exponents_csv(&fits, create(&path)?)?;
        written.push(path);
        Some(fits)
    } else {
        None
    };
    let manifest = json!({
        "tool": "peelcore",
        "version": env!("CARGO_PKG_VERSION"),
        "command": "bench",
        "n_values": config.n_values,
        "samples": config.samples,
        "p": config.p,
        "seed": config.seed,
        "methods": config.methods.iter().map(Method::to_string).collect::<Vec<_>>(),
    });
    written.push(write_manifest(dir, &manifest)?);
    Ok(BenchSummary {
        table,
        fits,
        written,
    })
}
