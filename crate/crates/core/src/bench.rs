//! Experiment runner and report rendering.
//!
//! Randomized algorithms run `repeats` times with seeds `base, base+1, ...`;
//! BF and A1 run once. Everything except wall-clock fields is a pure function
//! of the inputs and the base seed, so reports rendered without timing are
//! byte-identical across runs.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algos::{self, AlgoConfig, Algorithm, DiameterError, DiameterResult};
use crate::cost::{self, CostError, CostInputs, CostMethod};
use crate::geom::Dataset;
use crate::metrics::{self, CostBasis, MetricsError};

/// Bumped whenever a CSV column or JSON field changes.
pub const SCHEMA_VERSION: u32 = 1;

pub const DEFAULT_REPEATS: usize = 30;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error(transparent)]
    Algorithm(#[from] DiameterError),
    #[error(transparent)]
    Cost(#[from] CostError),
    #[error(transparent)]
    Metrics(#[from] MetricsError),
    #[error("accuracy/efficiency requested but no brute-force diameter is available; include BF or supply a cached oracle value")]
    MissingOracle,
    #[error("{0}")]
    InvalidInput(String),
    #[error("{algorithm} returned {value}, above the exact diameter {oracle}")]
    OracleViolation {
        algorithm: Algorithm,
        value: f64,
        oracle: f64,
    },
    #[error("report serialization failed: {0}")]
    Serialize(String),
}

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub repeats: usize,
    /// Measure wall-clock time per run (after one discarded warm-up run).
    pub timing: bool,
    /// Known exact diameter, used when BF is not part of the run.
    pub cached_oracle: Option<f64>,
    /// Fail with [`BenchError::MissingOracle`] if no exact diameter will be
    /// available for scoring.
    pub require_oracle: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            repeats: DEFAULT_REPEATS,
            timing: true,
            cached_oracle: None,
            require_oracle: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetInfo {
    pub name: String,
    pub n: usize,
    pub d: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigInfo {
    pub k: String,
    pub resolved_k: usize,
    pub beam_width: usize,
    pub tie_tolerance: f64,
    pub base_seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub seed: Option<u64>,
    pub value: f64,
    pub pair: (usize, usize),
    pub iterations: u64,
    pub distance_evals: u64,
    /// Operation count under the closed-form model of the algorithm.
    pub op_count: f64,
    pub wall_time_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Stats {
    pub min: f64,
    pub mean: f64,
    pub max: f64,
}

impl Stats {
    fn of(values: impl IntoIterator<Item = f64>) -> Option<Self> {
        let mut count = 0usize;
        let (mut min, mut max, mut sum) = (f64::INFINITY, f64::NEG_INFINITY, 0.0);
        for v in values {
            count += 1;
            min = min.min(v);
            max = max.max(v);
            sum += v;
        }
        // summation rounding can push the mean of equal values past them
        (count > 0).then(|| Stats {
            min,
            mean: (sum / count as f64).clamp(min, max),
            max,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgorithmStats {
    pub runs: usize,
    pub value: Stats,
    pub iterations: Stats,
    /// Runs whose value equals the exact diameter within relative 1e-9.
    pub exact_hits: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRecord {
    pub dataset: DatasetInfo,
    pub config: ConfigInfo,
    pub seeds_used: Vec<u64>,
    pub oracle_value: Option<f64>,
    pub runs: BTreeMap<Algorithm, Vec<RunRecord>>,
    pub statistics: BTreeMap<Algorithm, AlgorithmStats>,
}

/// Relative slack allowed when comparing a result against the exact diameter.
pub const ORACLE_REL_TOL: f64 = 1e-9;

fn matches_oracle(value: f64, oracle: f64) -> bool {
    (value - oracle).abs() <= ORACLE_REL_TOL * oracle.abs().max(f64::MIN_POSITIVE)
}

/// Operation count of one finished run.
pub fn op_count(result: &DiameterResult, n: usize, d: usize) -> Result<f64, CostError> {
    let inputs = CostInputs::new(n as u64, d as u64);
    match result.algorithm {
        Algorithm::BruteForce => cost::predicted_ops(CostMethod::BF, &inputs),
        Algorithm::MinMaxNorms => cost::predicted_ops(CostMethod::A1, &inputs),
        _ => cost::predicted_ops(
            CostMethod::Greedy,
            &inputs.with_iterations(result.iterations.max(1)),
        ),
    }
}

fn timed(
    algorithm: Algorithm,
    ds: &Dataset,
    cfg: &AlgoConfig,
    timing: bool,
) -> Result<(DiameterResult, Option<f64>), DiameterError> {
    if !timing {
        return Ok((algos::run(algorithm, ds, cfg)?, None));
    }
    let start = Instant::now();
    let res = algos::run(algorithm, ds, cfg)?;
    Ok((res, Some(start.elapsed().as_secs_f64() * 1e3)))
}

pub fn run_experiment(
    ds: &Dataset,
    cfg: &AlgoConfig,
    algorithms: &[Algorithm],
    opts: &RunOptions,
) -> Result<ExperimentRecord, BenchError> {
    if opts.repeats == 0 {
        return Err(BenchError::InvalidInput(
            "repeats must be at least 1".into(),
        ));
    }
    if algorithms.is_empty() {
        return Err(BenchError::InvalidInput("no algorithms selected".into()));
    }
    let has_bf = algorithms.contains(&Algorithm::BruteForce);
    if opts.require_oracle && !has_bf && opts.cached_oracle.is_none() {
        return Err(BenchError::MissingOracle);
    }
    cfg.validate()?;

    let mut selected = algorithms.to_vec();
    selected.sort();
    selected.dedup();

    let seeds: Vec<u64> = (0..opts.repeats as u64)
        .map(|i| cfg.seed.wrapping_add(i))
        .collect();

    let mut runs: BTreeMap<Algorithm, Vec<RunRecord>> = BTreeMap::new();
    for &alg in &selected {
        let alg_seeds: Vec<u64> = if alg.is_randomized() {
            seeds.clone()
        } else {
            vec![cfg.seed]
        };
        if opts.timing {
            // warm-up
            algos::run(alg, ds, &cfg.clone().with_seed(alg_seeds[0]))?;
        }
        let mut records = Vec::with_capacity(alg_seeds.len());
        for &seed in &alg_seeds {
            let run_cfg = cfg.clone().with_seed(seed);
            let (res, wall) = timed(alg, ds, &run_cfg, opts.timing)?;
            records.push(RunRecord {
                seed: res.seed,
                value: res.value,
                pair: (res.pair.0.index(), res.pair.1.index()),
                iterations: res.iterations,
                distance_evals: res.distance_evals,
                op_count: op_count(&res, ds.n(), ds.d())?,
                wall_time_ms: wall,
            });
        }
        runs.insert(alg, records);
    }

    let oracle_value = runs
        .get(&Algorithm::BruteForce)
        .map(|r| r[0].value)
        .or(opts.cached_oracle);

    if let Some(oracle) = oracle_value {
        for (&alg, records) in &runs {
            for r in records {
                if r.value > oracle * (1.0 + ORACLE_REL_TOL) {
                    return Err(BenchError::OracleViolation {
                        algorithm: alg,
                        value: r.value,
                        oracle,
                    });
                }
            }
        }
    }

    let statistics = runs
        .iter()
        .map(|(&alg, records)| {
            let stats = AlgorithmStats {
                runs: records.len(),
                value: Stats::of(records.iter().map(|r| r.value)).expect("at least one run"),
                iterations: Stats::of(records.iter().map(|r| r.iterations as f64))
                    .expect("at least one run"),
                exact_hits: oracle_value.map(|o| {
                    records
                        .iter()
                        .filter(|r| matches_oracle(r.value, o))
                        .count()
                }),
            };
            (alg, stats)
        })
        .collect();

    let uses_seeds = selected.iter().any(|a| a.is_randomized());
    Ok(ExperimentRecord {
        dataset: DatasetInfo {
            name: ds.name().to_string(),
            n: ds.n(),
            d: ds.d(),
        },
        config: ConfigInfo {
            k: cfg.k.to_string(),
            resolved_k: algos::resolve_k(ds.n(), cfg),
            beam_width: cfg.beam_width,
            tie_tolerance: cfg.tie_tolerance,
            base_seed: cfg.seed,
        },
        seeds_used: if uses_seeds { seeds } else { Vec::new() },
        oracle_value,
        runs,
        statistics,
    })
}

/// `(name, n, d)` of a dataset whose cost is being modelled.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dims {
    pub name: String,
    pub n: u64,
    pub d: u64,
}

impl Dims {
    pub fn new(name: impl Into<String>, n: u64, d: u64) -> Self {
        Self {
            name: name.into(),
            n,
            d,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CostModelRow {
    pub dataset: String,
    /// `M1`..`M8`, `BF`, `A1`..`A4`.
    pub label: String,
    pub method: CostMethod,
    pub n: u64,
    pub d: u64,
    pub epsilon: f64,
    pub m: u64,
    pub iterations: Option<u64>,
    pub predicted_ops: f64,
}

/// Observed iteration counts of A2..A4, keyed by dataset name.
pub type ObservedIterations = BTreeMap<String, BTreeMap<Algorithm, u64>>;

/// Evaluates M1..M8, BF and A1 on every `(n, d)`, plus A2..A4 wherever
/// observed iteration counts are supplied.
pub fn compare_cost_models(
    dims: &[Dims],
    epsilon: f64,
    observed: Option<&ObservedIterations>,
) -> Result<Vec<CostModelRow>, BenchError> {
    if dims.is_empty() {
        return Err(BenchError::InvalidInput("no datasets to compare".into()));
    }
    let mut rows = Vec::new();
    for dim in dims {
        let inputs = CostInputs::new(dim.n, dim.d).with_epsilon(epsilon);
        inputs.validate()?;
        let fixed = CostMethod::LITERATURE
            .into_iter()
            .chain([CostMethod::BF, CostMethod::A1]);
        for method in fixed {
            rows.push(CostModelRow {
                dataset: dim.name.clone(),
                label: method.label().to_string(),
                method,
                n: dim.n,
                d: dim.d,
                epsilon,
                m: inputs.resolved_m(),
                iterations: None,
                predicted_ops: cost::predicted_ops(method, &inputs)?,
            });
        }
        let Some(seen) = observed.and_then(|o| o.get(&dim.name)) else {
            continue;
        };
        for alg in [
            Algorithm::HillClimbing,
            Algorithm::TabuSearch,
            Algorithm::BeamSearch,
        ] {
            if let Some(&it) = seen.get(&alg) {
                let with_it = inputs.clone().with_iterations(it);
                rows.push(CostModelRow {
                    dataset: dim.name.clone(),
                    label: alg.id().to_string(),
                    method: CostMethod::Greedy,
                    n: dim.n,
                    d: dim.d,
                    epsilon,
                    m: inputs.resolved_m(),
                    iterations: Some(it),
                    predicted_ops: cost::predicted_ops(CostMethod::Greedy, &with_it)?,
                });
            }
        }
    }
    Ok(rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    HumanTable,
    Csv,
    Json,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "table" | "human" | "human_table" => Ok(ReportFormat::HumanTable),
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            _ => Err(format!("unknown format `{s}` (expected table|csv|json)")),
        }
    }
}

/// One line of the per-algorithm summary: means over all runs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub dataset: String,
    pub n: usize,
    pub d: usize,
    pub algorithm: Algorithm,
    pub runs: usize,
    pub oracle: Option<f64>,
    pub diameter_mean: f64,
    pub diameter_min: f64,
    pub diameter_max: f64,
    pub approximation_mean: Option<f64>,
    pub accuracy_mean: Option<f64>,
    pub iterations_mean: f64,
    pub iterations_min: f64,
    pub iterations_max: f64,
    pub distance_evals_mean: f64,
    pub ops_mean: f64,
    pub time_ms_mean: Option<f64>,
    pub efficiency_mean: Option<f64>,
    pub exact_rate: Option<f64>,
}

fn mean(values: &[f64]) -> Option<f64> {
    (!values.is_empty()).then(|| values.iter().sum::<f64>() / values.len() as f64)
}

/// Per-algorithm summary rows, with efficiency computed on `basis`.
pub fn summarize(record: &ExperimentRecord, basis: CostBasis) -> Vec<SummaryRow> {
    let info = &record.dataset;
    let bf_ops = cost::predicted_ops(
        CostMethod::BF,
        &CostInputs::new(info.n as u64, info.d as u64),
    )
    .ok();
    let bf_time = record.runs.get(&Algorithm::BruteForce).and_then(|r| {
        let times: Option<Vec<f64>> = r.iter().map(|x| x.wall_time_ms).collect();
        times.and_then(|t| mean(&t))
    });

    record
        .runs
        .iter()
        .map(|(&alg, runs)| {
            let stats = &record.statistics[&alg];
            let oracle = record.oracle_value;
            let scores: Vec<metrics::AccuracyScore> = oracle
                .map(|o| {
                    runs.iter()
                        .filter_map(|r| metrics::accuracy(o, r.value).ok())
                        .collect()
                })
                .unwrap_or_default();
            let scored = scores.len() == runs.len() && !scores.is_empty();

            let efficiencies: Vec<f64> = if scored {
                runs.iter()
                    .zip(&scores)
                    .filter_map(|(r, s)| {
                        let (t_alg, t_bf) = match basis {
                            CostBasis::OpCount => (Some(r.op_count), bf_ops),
                            CostBasis::WallTime => (r.wall_time_ms, bf_time),
                        };
                        metrics::efficiency(s.accuracy, t_alg?, t_bf?).ok()
                    })
                    .collect()
            } else {
                Vec::new()
            };
            let times: Option<Vec<f64>> = runs.iter().map(|r| r.wall_time_ms).collect();

            SummaryRow {
                dataset: info.name.clone(),
                n: info.n,
                d: info.d,
                algorithm: alg,
                runs: runs.len(),
                oracle,
                diameter_mean: stats.value.mean,
                diameter_min: stats.value.min,
                diameter_max: stats.value.max,
                approximation_mean: scored
                    .then(|| mean(&scores.iter().map(|s| s.approximation).collect::<Vec<_>>()))
                    .flatten(),
                accuracy_mean: scored
                    .then(|| mean(&scores.iter().map(|s| s.accuracy).collect::<Vec<_>>()))
                    .flatten(),
                iterations_mean: stats.iterations.mean,
                iterations_min: stats.iterations.min,
                iterations_max: stats.iterations.max,
                distance_evals_mean: mean(
                    &runs
                        .iter()
                        .map(|r| r.distance_evals as f64)
                        .collect::<Vec<_>>(),
                )
                .unwrap_or(0.0),
                ops_mean: mean(&runs.iter().map(|r| r.op_count).collect::<Vec<_>>()).unwrap_or(0.0),
                time_ms_mean: times.and_then(|t| mean(&t)),
                efficiency_mean: (efficiencies.len() == runs.len())
                    .then(|| mean(&efficiencies))
                    .flatten(),
                exact_rate: stats.exact_hits.map(|h| h as f64 / runs.len() as f64),
            }
        })
        .collect()
}

/// Top-level JSON document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub basis: CostBasis,
    pub time_unit: String,
    pub records: Vec<ExperimentRecord>,
    pub summary: Vec<SummaryRow>,
    pub cost_models: Vec<CostModelRow>,
}

impl Report {
    pub fn new(records: &[ExperimentRecord], rows: &[CostModelRow], basis: CostBasis) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            basis,
            time_unit: "ms".into(),
            records: records.to_vec(),
            summary: records.iter().flat_map(|r| summarize(r, basis)).collect(),
            cost_models: rows.to_vec(),
        }
    }
}

/// Column set of the experiment CSV for [`SCHEMA_VERSION`].
pub const SUMMARY_CSV_COLUMNS: [&str; 21] = [
    "schema_version",
    "basis",
    "dataset",
    "n",
    "d",
    "algorithm",
    "runs",
    "oracle",
    "diameter_mean",
    "diameter_min",
    "diameter_max",
    "approximation_mean",
    "accuracy_mean",
    "iterations_mean",
    "iterations_min",
    "iterations_max",
    "distance_evals_mean",
    "ops_mean",
    "time_ms_mean",
    "efficiency_mean",
    "exact_rate",
];

/// Column set of the cost-model CSV for [`SCHEMA_VERSION`].
pub const COST_CSV_COLUMNS: [&str; 10] = [
    "schema_version",
    "dataset",
    "label",
    "method",
    "n",
    "d",
    "epsilon",
    "m",
    "iterations",
    "predicted_ops",
];

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn render_report(
    records: &[ExperimentRecord],
    rows: &[CostModelRow],
    format: ReportFormat,
    basis: CostBasis,
) -> Result<String, BenchError> {
    if records.is_empty() && rows.is_empty() {
        return Err(BenchError::InvalidInput("nothing to report".into()));
    }
    let report = Report::new(records, rows, basis);
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&report)
                .map_err(|e| BenchError::Serialize(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        ReportFormat::Csv => render_csv(&report),
        ReportFormat::HumanTable => Ok(render_table(&report)),
    }
}

fn render_csv(report: &Report) -> Result<String, BenchError> {
    let ser = |e: csv::Error| BenchError::Serialize(e.to_string());
    let mut out = Vec::new();
    if !report.summary.is_empty() {
        let mut w = csv::Writer::from_writer(&mut out);
        w.write_record(SUMMARY_CSV_COLUMNS).map_err(ser)?;
        for r in &report.summary {
            w.write_record([
                report.schema_version.to_string(),
                report.basis.label().to_string(),
                r.dataset.clone(),
                r.n.to_string(),
                r.d.to_string(),
                r.algorithm.id().to_string(),
                r.runs.to_string(),
                opt(r.oracle),
                r.diameter_mean.to_string(),
                r.diameter_min.to_string(),
                r.diameter_max.to_string(),
                opt(r.approximation_mean),
                opt(r.accuracy_mean),
                r.iterations_mean.to_string(),
                r.iterations_min.to_string(),
                r.iterations_max.to_string(),
                r.distance_evals_mean.to_string(),
                r.ops_mean.to_string(),
                opt(r.time_ms_mean),
                opt(r.efficiency_mean),
                opt(r.exact_rate),
            ])
            .map_err(ser)?;
        }
        w.flush()
            .map_err(|e| BenchError::Serialize(e.to_string()))?;
    }
    if !report.cost_models.is_empty() {
        if !out.is_empty() {
            out.push(b'\n');
        }
        let mut w = csv::Writer::from_writer(&mut out);
        w.write_record(COST_CSV_COLUMNS).map_err(ser)?;
        for r in &report.cost_models {
            w.write_record([
                report.schema_version.to_string(),
                r.dataset.clone(),
                r.label.clone(),
                r.method.label().to_string(),
                r.n.to_string(),
                r.d.to_string(),
                r.epsilon.to_string(),
                r.m.to_string(),
                opt(r.iterations),
                r.predicted_ops.to_string(),
            ])
            .map_err(ser)?;
        }
        w.flush()
            .map_err(|e| BenchError::Serialize(e.to_string()))?;
    }
    String::from_utf8(out).map_err(|e| BenchError::Serialize(e.to_string()))
}

/// `1.23E+04` style, three significant digits.
fn sci(v: f64) -> String {
    let raw = format!("{v:.2E}");
    match raw.split_once('E') {
        Some((mantissa, exp)) => {
            let e: i32 = exp.parse().unwrap_or(0);
            let sign = if e < 0 { '-' } else { '+' };
            format!("{mantissa}E{sign}{:02}", e.abs())
        }
        None => raw,
    }
}

fn fixed3(v: Option<f64>) -> String {
    v.map(|x| format!("{x:.3}")).unwrap_or_else(|| "-".into())
}

fn push_table(out: &mut String, header: &[String], body: &[Vec<String>]) {
    let mut widths: Vec<usize> = header.iter().map(String::len).collect();
    for row in body {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: &[String]| {
        cells
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(i, (c, &w))| {
                if i == 0 {
                    format!("{c:<w$}")
                } else {
                    format!("{c:>w$}")
                }
            })
            .collect::<Vec<_>>()
            .join("  ")
    };
    let _ = writeln!(out, "{}", line(header));
    let _ = writeln!(
        out,
        "{}",
        "-".repeat(widths.iter().sum::<usize>() + 2 * (widths.len() - 1))
    );
    for row in body {
        let _ = writeln!(out, "{}", line(row));
    }
}

fn render_table(report: &Report) -> String {
    let mut out = String::new();
    if !report.summary.is_empty() {
        let header: Vec<String> = [
            "dataset",
            "alg",
            "runs",
            "diameter",
            "approx",
            "accuracy",
            "iters",
            "iters[min,max]",
            "ops",
            "time_ms",
            "efficiency",
            "exact",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        let body: Vec<Vec<String>> = report
            .summary
            .iter()
            .map(|r| {
                vec![
                    r.dataset.clone(),
                    r.algorithm.id().to_string(),
                    r.runs.to_string(),
                    sci(r.diameter_mean),
                    r.approximation_mean
                        .map_or("-".into(), |a| format!("{a:.1}")),
                    fixed3(r.accuracy_mean),
                    format!("{:.1}", r.iterations_mean),
                    format!("[{}, {}]", r.iterations_min, r.iterations_max),
                    sci(r.ops_mean),
                    r.time_ms_mean.map_or("-".into(), |t| format!("{t:.3}")),
                    fixed3(r.efficiency_mean),
                    r.exact_rate
                        .map_or("-".into(), |e| format!("{:.0}%", e * 100.0)),
                ]
            })
            .collect();
        let _ = writeln!(
            out,
            "Diameter benchmark (efficiency basis: {}, time unit: {})\n",
            report.basis.label(),
            report.time_unit
        );
        push_table(&mut out, &header, &body);
    }
    if !report.cost_models.is_empty() {
        if !out.is_empty() {
            out.push('\n');
        }
        // pivot: one row per method label, one column per dataset
        let mut datasets: Vec<&str> = Vec::new();
        let mut labels: Vec<&str> = Vec::new();
        for r in &report.cost_models {
            if !datasets.contains(&r.dataset.as_str()) {
                datasets.push(&r.dataset);
            }
            if !labels.contains(&r.label.as_str()) {
                labels.push(&r.label);
            }
        }
        let mut header = vec!["method".to_string()];
        header.extend(datasets.iter().map(|s| s.to_string()));
        let body: Vec<Vec<String>> = labels
            .iter()
            .map(|&label| {
                let mut row = vec![label.to_string()];
                for &ds in &datasets {
                    let cell = report
                        .cost_models
                        .iter()
                        .find(|r| r.label == label && r.dataset == ds)
                        .map_or("-".into(), |r| sci(r.predicted_ops));
                    row.push(cell);
                }
                row
            })
            .collect();
        let eps = report.cost_models[0].epsilon;
        let _ = writeln!(out, "Operation counts (epsilon = {eps}, log base 2)\n");
        push_table(&mut out, &header, &body);
    }
    out
}
