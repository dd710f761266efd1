use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use diameter_core::algos::{
    self, AlgoConfig, Algorithm, DiameterError, KChoice, DEFAULT_BEAM_WIDTH, DEFAULT_SEED,
};
use diameter_core::bench::{
    self, BenchError, Dims, ObservedIterations, ReportFormat, RunOptions, DEFAULT_REPEATS,
};
use diameter_core::cost::{CostError, DEFAULT_EPSILON};
use diameter_core::dataset::{self, DatasetDescriptor, DatasetError, Distribution, SyntheticSpec};
use diameter_core::geom::GeomError;
use diameter_core::metrics::{CostBasis, MetricsError};

#[derive(Parser)]
#[command(
    name = "diameter",
    version,
    about = "Exact and greedy furthest-pair computation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the diameter of one CSV file with one algorithm.
    Diameter(DiameterArgs),
    /// Run every algorithm over the datasets of a manifest and report.
    Bench(BenchArgs),
    /// Tabulate predicted operation counts for the datasets of a manifest.
    Compare(CompareArgs),
    /// Write a synthetic dataset as CSV.
    Gen(GenArgs),
}

#[derive(Args)]
struct AlgoArgs {
    /// Base seed for randomized algorithms.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Extreme-set size for A1: a positive integer or `auto` (ceil(log2 n)).
    #[arg(long, default_value = "auto")]
    k: KChoice,
    /// Number of random starts for beam search.
    #[arg(long, default_value_t = DEFAULT_BEAM_WIDTH)]
    beam_width: usize,
    /// Relative tolerance for treating distances as tied (0 = exact).
    #[arg(long, default_value_t = 0.0)]
    tie_tolerance: f64,
}

impl AlgoArgs {
    fn config(&self) -> AlgoConfig {
        AlgoConfig {
            k: self.k,
            beam_width: self.beam_width,
            tie_tolerance: self.tie_tolerance,
            seed: self.seed,
        }
    }
}

#[derive(Args)]
struct DiameterArgs {
    file: PathBuf,
    #[arg(long, short, default_value = "bf")]
    algorithm: Algorithm,
    #[command(flatten)]
    algo: AlgoArgs,
    #[arg(long, default_value_t = ',')]
    delimiter: char,
    /// Skip the first line.
    #[arg(long)]
    header: bool,
    /// Zero-based columns to drop (class labels etc.), comma separated.
    #[arg(long, value_delimiter = ',')]
    label_columns: Vec<usize>,
    /// Print the result as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    manifest: PathBuf,
    #[arg(long, default_value_t = DEFAULT_REPEATS)]
    repeats: usize,
    #[command(flatten)]
    algo: AlgoArgs,
    /// Algorithms to run, comma separated (bf,norms,hc,tabu,beam).
    #[arg(long, value_delimiter = ',', default_value = "bf,norms,hc,tabu,beam")]
    algorithms: Vec<Algorithm>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "table")]
    format: ReportFormat,
    /// Cost used for efficiency: wall-clock time or operation count.
    #[arg(long, default_value = "ops")]
    basis: CostBasis,
    /// Skip wall-clock measurement so reports are reproducible byte for byte.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
struct CompareArgs {
    #[arg(long)]
    manifest: PathBuf,
    #[arg(long, default_value_t = DEFAULT_EPSILON)]
    epsilon: f64,
    /// Also run A2..A4 once per dataset and add their operation counts.
    #[arg(long)]
    observe: bool,
    #[command(flatten)]
    algo: AlgoArgs,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "table")]
    format: ReportFormat,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: usize,
    #[arg(long, default_value = "uniform")]
    dist: Distribution,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    low: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    high: f64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let outcome = match cli.command {
        Command::Diameter(a) => cmd_diameter(a),
        Command::Bench(a) => cmd_bench(a),
        Command::Compare(a) => cmd_compare(a),
        Command::Gen(a) => cmd_gen(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

/// 1 for bad input, 2 for anything that indicates a bug or environment failure.
fn exit_code(e: &anyhow::Error) -> u8 {
    for cause in e.chain() {
        if cause.is::<DatasetError>()
            || cause.is::<GeomError>()
            || cause.is::<CostError>()
            || cause.is::<MetricsError>()
            || cause.is::<io::Error>()
            || cause.is::<InputError>()
        {
            return 1;
        }
        if let Some(d) = cause.downcast_ref::<DiameterError>() {
            return match d {
                DiameterError::InvalidConfig(_) | DiameterError::DegenerateDataset { .. } => 1,
            };
        }
        if let Some(b) = cause.downcast_ref::<BenchError>() {
            return match b {
                BenchError::InvalidInput(_)
                | BenchError::MissingOracle
                | BenchError::Algorithm(_)
                | BenchError::Cost(_)
                | BenchError::Metrics(_) => 1,
                BenchError::OracleViolation { .. } | BenchError::Serialize(_) => 2,
            };
        }
    }
    2
}

#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct InputError(String);

fn open_out(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn cmd_diameter(a: DiameterArgs) -> Result<()> {
    let mut desc = DatasetDescriptor::csv(
        a.file
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "input".into()),
        a.file.to_string_lossy(),
    );
    desc.delimiter = a.delimiter;
    desc.has_header = a.header;
    desc.label_columns = a.label_columns;
    let ds = dataset::load(&desc)?;
    let res = algos::run(a.algorithm, &ds, &a.algo.config())?;

    let mut out = io::stdout().lock();
    if a.json {
        serde_json::to_writer_pretty(&mut out, &res)?;
        writeln!(out)?;
    } else {
        writeln!(
            out,
            "dataset:        {} (n = {}, d = {})",
            ds.name(),
            ds.n(),
            ds.d()
        )?;
        writeln!(
            out,
            "algorithm:      {} ({})",
            res.algorithm.id(),
            res.algorithm.cli_name()
        )?;
        writeln!(out, "diameter:       {}", res.value)?;
        writeln!(
            out,
            "pair:           {} {}",
            res.pair.0.index(),
            res.pair.1.index()
        )?;
        writeln!(out, "iterations:     {}", res.iterations)?;
        writeln!(out, "distance evals: {}", res.distance_evals)?;
        if let Some(seed) = res.seed {
            writeln!(out, "seed:           {seed}")?;
        }
    }
    Ok(())
}

fn load_manifest(path: &Path) -> Result<Vec<DatasetDescriptor>> {
    let descs = dataset::load_manifest(path)?;
    if descs.is_empty() {
        return Err(InputError(format!("{}: manifest lists no datasets", path.display())).into());
    }
    Ok(descs)
}

fn cmd_bench(a: BenchArgs) -> Result<()> {
    let cfg = a.algo.config();
    let opts = RunOptions {
        repeats: a.repeats,
        timing: !a.no_timing,
        cached_oracle: None,
        require_oracle: false,
    };
    if a.basis == CostBasis::WallTime && a.no_timing {
        bail!(InputError(
            "--basis time needs timing; drop --no-timing".into()
        ));
    }
    let mut records = Vec::new();
    for desc in load_manifest(&a.manifest)? {
        let ds = dataset::load(&desc)?;
        if let Some(note) = desc.range_note(&ds) {
            eprintln!("note: {note}");
        }
        let rec = bench::run_experiment(&ds, &cfg, &a.algorithms, &opts)
            .with_context(|| format!("dataset {}", desc.name))?;
        records.push(rec);
    }
    let text = bench::render_report(&records, &[], a.format, a.basis)?;
    let mut out = open_out(a.out.as_deref())?;
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn cmd_compare(a: CompareArgs) -> Result<()> {
    let cfg = a.algo.config();
    let mut dims = Vec::new();
    let mut observed = ObservedIterations::new();
    for desc in load_manifest(&a.manifest)? {
        let need_data = a.observe || desc.declared_dims().is_none();
        let loaded = if need_data {
            Some(dataset::load(&desc)?)
        } else {
            None
        };
        let (n, d) = match (&loaded, desc.declared_dims()) {
            (Some(ds), _) => (ds.n(), ds.d()),
            (None, Some(nd)) => nd,
            (None, None) => unreachable!("loaded whenever dims are undeclared"),
        };
        dims.push(Dims::new(desc.name.clone(), n as u64, d as u64));
        if let (true, Some(ds)) = (a.observe, &loaded) {
            let mut seen = BTreeMap::new();
            for alg in [
                Algorithm::HillClimbing,
                Algorithm::TabuSearch,
                Algorithm::BeamSearch,
            ] {
                seen.insert(alg, algos::run(alg, ds, &cfg)?.iterations);
            }
            observed.insert(desc.name.clone(), seen);
        }
    }
    let rows = bench::compare_cost_models(&dims, a.epsilon, a.observe.then_some(&observed))?;
    let text = bench::render_report(&[], &rows, a.format, CostBasis::OpCount)?;
    let mut out = open_out(a.out.as_deref())?;
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn cmd_gen(a: GenArgs) -> Result<()> {
    let spec = SyntheticSpec {
        n: a.n,
        d: a.d,
        low: a.low,
        high: a.high,
        distribution: a.dist,
        seed: a.seed,
    };
    let ds = dataset::generate_synthetic(&spec)?;
    let mut out = open_out(a.out.as_deref())?;
    dataset::write_csv(&ds, &mut out)?;
    out.flush()?;
    Ok(())
}
