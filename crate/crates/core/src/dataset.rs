//! Dataset ingestion: delimited text files, TOML manifests, a registry of
//! benchmark datasets, and a seeded synthetic generator.
//!
//! Rows keep their file order. Tie-breaking in the algorithms depends on row
//! order, so loaders never shuffle.

use std::collections::HashSet;
use std::fmt;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::{Dataset, GeomError};
use crate::rng::RandomSource;

/// Environment variable naming the directory that holds fetched dataset files.
pub const DATA_DIR_ENV: &str = "DIAMETER_DATA_DIR";

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("cannot read {path}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{source_name}: parse error at line {line}, column {column}: {message}")]
    Parse {
        source_name: String,
        line: u64,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Validation(String),
    #[error("manifest {location}: {message}")]
    Manifest { location: String, message: String },
    #[error("invalid synthetic spec: {0}")]
    InvalidSpec(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Distribution {
    UniformReal,
    UniformInteger,
    Bernoulli,
}

impl Distribution {
    pub fn label(self) -> &'static str {
        match self {
            Distribution::UniformReal => "uniform_real",
            Distribution::UniformInteger => "uniform_integer",
            Distribution::Bernoulli => "bernoulli",
        }
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Distribution {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "uniform" | "uniform_real" | "real" => Ok(Distribution::UniformReal),
            "int" | "integer" | "uniform_integer" => Ok(Distribution::UniformInteger),
            "bernoulli" | "binary" => Ok(Distribution::Bernoulli),
            _ => Err(format!(
                "unknown distribution `{s}` (expected uniform|int|bernoulli)"
            )),
        }
    }
}

/// Parameters of a generated dataset. Cells are drawn row-major from a
/// [`RandomSource`] seeded with `seed`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SyntheticSpec {
    pub n: usize,
    pub d: usize,
    #[serde(default)]
    pub low: f64,
    #[serde(default = "default_high")]
    pub high: f64,
    pub distribution: Distribution,
    pub seed: u64,
}

fn default_high() -> f64 {
    1.0
}

impl SyntheticSpec {
    pub fn validate(&self) -> Result<(), DatasetError> {
        if self.n == 0 || self.d == 0 {
            return Err(DatasetError::InvalidSpec(format!(
                "n and d must be positive (n = {}, d = {})",
                self.n, self.d
            )));
        }
        if self.distribution == Distribution::Bernoulli {
            return Ok(());
        }
        if !(self.low.is_finite() && self.high.is_finite() && self.low < self.high) {
            return Err(DatasetError::InvalidSpec(format!(
                "need finite low < high, got [{}, {}]",
                self.low, self.high
            )));
        }
        if self.distribution == Distribution::UniformInteger && self.low.ceil() > self.high.floor()
        {
            return Err(DatasetError::InvalidSpec(format!(
                "no integer lies in [{}, {}]",
                self.low, self.high
            )));
        }
        Ok(())
    }

    pub fn name(&self) -> String {
        match self.distribution {
            Distribution::Bernoulli => format!(
                "synthetic-bernoulli-n{}-d{}-seed{}",
                self.n, self.d, self.seed
            ),
            dist => format!(
                "synthetic-{}-n{}-d{}-[{},{}]-seed{}",
                dist, self.n, self.d, self.low, self.high, self.seed
            ),
        }
    }
}

pub fn generate_synthetic(spec: &SyntheticSpec) -> Result<Dataset, DatasetError> {
    spec.validate()?;
    let mut rng = RandomSource::new(spec.seed);
    let cells = spec.n * spec.d;
    let values: Vec<f64> = match spec.distribution {
        Distribution::UniformReal => (0..cells)
            .map(|_| rng.uniform_real(spec.low, spec.high).min(spec.high))
            .collect(),
        Distribution::UniformInteger => {
            let (lo, hi) = (spec.low.ceil() as i64, spec.high.floor() as i64);
            (0..cells).map(|_| rng.uniform_int(lo, hi) as f64).collect()
        }
        Distribution::Bernoulli => (0..cells)
            .map(|_| if rng.coin() { 1.0 } else { 0.0 })
            .collect(),
    };
    let ds = Dataset::from_flat(spec.name(), spec.d, values).map_err(geom_to_validation)?;
    Ok(ds.with_provenance("synthetic"))
}

fn geom_to_validation(e: GeomError) -> DatasetError {
    DatasetError::Validation(e.to_string())
}

/// How to find and interpret one dataset file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatasetDescriptor {
    pub name: String,
    /// File path, or the literal `synthetic` together with a `synthetic` table.
    pub path: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_d: Option<usize>,
    /// Published value range; checked only informationally.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub declared_range: Option<(f64, f64)>,
    /// Zero-based column indices dropped before parsing.
    #[serde(default)]
    pub label_columns: Vec<usize>,
    #[serde(default = "default_delimiter")]
    pub delimiter: char,
    #[serde(default)]
    pub has_header: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub synthetic: Option<SyntheticSpec>,
    #[serde(skip)]
    pub base_dir: Option<PathBuf>,
}

fn default_delimiter() -> char {
    ','
}

impl DatasetDescriptor {
    pub fn csv(name: impl Into<String>, path: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            path: path.into(),
            expected_n: None,
            expected_d: None,
            declared_range: None,
            label_columns: Vec::new(),
            delimiter: ',',
            has_header: false,
            synthetic: None,
            base_dir: None,
        }
    }

    pub fn synthetic(name: impl Into<String>, spec: SyntheticSpec) -> Self {
        Self {
            expected_n: Some(spec.n),
            expected_d: Some(spec.d),
            synthetic: Some(spec),
            ..Self::csv(name, "synthetic")
        }
    }

    pub fn is_synthetic(&self) -> bool {
        self.path == "synthetic"
    }

    /// Resolves a relative path against the manifest directory first, then
    /// against `$DIAMETER_DATA_DIR`.
    pub fn resolve_path(&self) -> PathBuf {
        let raw = Path::new(&self.path);
        if raw.is_absolute() {
            return raw.to_path_buf();
        }
        let local = match &self.base_dir {
            Some(dir) => dir.join(raw),
            None => raw.to_path_buf(),
        };
        if local.exists() {
            return local;
        }
        if let Some(dir) = std::env::var_os(DATA_DIR_ENV) {
            let candidate = PathBuf::from(dir).join(raw);
            if candidate.exists() {
                return candidate;
            }
        }
        local
    }

    /// `(n, d)` known without loading, if both are declared.
    pub fn declared_dims(&self) -> Option<(usize, usize)> {
        Some((self.expected_n?, self.expected_d?))
    }

    /// Describes values outside `declared_range`, if any.
    pub fn range_note(&self, ds: &Dataset) -> Option<String> {
        let (lo, hi) = self.declared_range?;
        let (lo, hi) = (lo.min(hi), lo.max(hi));
        let outside = ds.rows().flatten().filter(|&&v| v < lo || v > hi).count();
        (outside > 0).then(|| {
            format!(
                "{}: {outside} value(s) outside the declared range [{lo}, {hi}]",
                self.name
            )
        })
    }

    fn check_dims(&self, ds: &Dataset) -> Result<(), DatasetError> {
        if let Some(n) = self.expected_n {
            if ds.n() != n {
                return Err(DatasetError::Validation(format!(
                    "{}: expected {n} rows, found {}",
                    self.name,
                    ds.n()
                )));
            }
        }
        if let Some(d) = self.expected_d {
            if ds.d() != d {
                return Err(DatasetError::Validation(format!(
                    "{}: expected {d} feature columns, found {}",
                    self.name,
                    ds.d()
                )));
            }
        }
        Ok(())
    }
}

/// Loads the dataset a descriptor points at (file or generator).
pub fn load(desc: &DatasetDescriptor) -> Result<Dataset, DatasetError> {
    if desc.is_synthetic() {
        let spec = desc.synthetic.as_ref().ok_or_else(|| {
            DatasetError::Validation(format!(
                "{}: path is `synthetic` but no synthetic spec is given",
                desc.name
            ))
        })?;
        let ds = generate_synthetic(spec)?;
        desc.check_dims(&ds)?;
        return Ok(ds.with_name(desc.name.clone()));
    }
    load_csv(desc)
}

pub fn load_csv(desc: &DatasetDescriptor) -> Result<Dataset, DatasetError> {
    let path = desc.resolve_path();
    let file = std::fs::File::open(&path).map_err(|source| DatasetError::Io {
        path: path.clone(),
        source,
    })?;
    let ds = parse_csv(file, desc, &path.display().to_string())?;
    Ok(ds.with_provenance(path.display().to_string()))
}

/// Parses delimited text from any reader. `source_name` only labels errors.
pub fn parse_csv<R: Read>(
    reader: R,
    desc: &DatasetDescriptor,
    source_name: &str,
) -> Result<Dataset, DatasetError> {
    if !desc.delimiter.is_ascii() {
        return Err(DatasetError::Validation(format!(
            "{}: delimiter must be a single ASCII character",
            desc.name
        )));
    }
    let mut rdr = csv::ReaderBuilder::new()
        .delimiter(desc.delimiter as u8)
        .has_headers(desc.has_header)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader);

    let parse_err = |line: u64, column: usize, message: String| DatasetError::Parse {
        source_name: source_name.to_string(),
        line,
        column,
        message,
    };

    let mut width: Option<usize> = None;
    let mut d = 0;
    let mut values = Vec::new();
    for record in rdr.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            parse_err(line, 0, e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line());
        let w = *width.get_or_insert_with(|| record.len());
        if record.len() != w {
            return Err(parse_err(
                line,
                record.len().min(w) + 1,
                format!("expected {w} fields, found {}", record.len()),
            ));
        }
        if d == 0 {
            if let Some(&bad) = desc.label_columns.iter().find(|&&c| c >= w) {
                return Err(DatasetError::Validation(format!(
                    "{}: label column {bad} out of range for {w} columns",
                    desc.name
                )));
            }
            d = (0..w).filter(|c| !desc.label_columns.contains(c)).count();
            if d == 0 {
                return Err(DatasetError::Validation(format!(
                    "{}: no feature columns left after dropping labels",
                    desc.name
                )));
            }
        }
        for (col, cell) in record.iter().enumerate() {
            if desc.label_columns.contains(&col) {
                continue;
            }
            if cell.is_empty() {
                return Err(parse_err(line, col + 1, "missing value".into()));
            }
            let v: f64 = cell
                .parse()
                .map_err(|_| parse_err(line, col + 1, format!("`{cell}` is not a number")))?;
            if !v.is_finite() {
                return Err(DatasetError::Validation(format!(
                    "{source_name}: non-finite value `{cell}` at line {line}, column {}",
                    col + 1
                )));
            }
            values.push(v);
        }
    }
    if values.is_empty() {
        return Err(DatasetError::Validation(format!(
            "{}: no data rows",
            desc.name
        )));
    }
    let ds = Dataset::from_flat(desc.name.clone(), d, values).map_err(geom_to_validation)?;
    desc.check_dims(&ds)?;
    Ok(ds)
}

/// Writes a dataset as headerless comma-separated text. Values use the
/// shortest representation that parses back to the same `f64`.
pub fn write_csv<W: std::io::Write>(ds: &Dataset, mut out: W) -> std::io::Result<()> {
    for row in ds.rows() {
        let mut first = true;
        for v in row {
            if !first {
                out.write_all(b",")?;
            }
            first = false;
            write!(out, "{v}")?;
        }
        out.write_all(b"\n")?;
    }
    Ok(())
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ManifestFile {
    #[serde(default)]
    dataset: Vec<DatasetDescriptor>,
}

/// Reads a TOML manifest made of `[[dataset]]` tables.
pub fn load_manifest(path: &Path) -> Result<Vec<DatasetDescriptor>, DatasetError> {
    let text = std::fs::read_to_string(path).map_err(|source| DatasetError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let base = path.parent().map(Path::to_path_buf);
    parse_manifest(&text, &path.display().to_string(), base)
}

pub fn parse_manifest(
    text: &str,
    source_name: &str,
    base_dir: Option<PathBuf>,
) -> Result<Vec<DatasetDescriptor>, DatasetError> {
    let parsed: ManifestFile = toml::from_str(text).map_err(|e| {
        let location = match e.span() {
            Some(span) => {
                let line = text[..span.start].matches('\n').count() + 1;
                format!("{source_name}:{line}")
            }
            None => source_name.to_string(),
        };
        DatasetError::Manifest {
            location,
            message: e.message().to_string(),
        }
    })?;

    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(parsed.dataset.len());
    for (i, mut desc) in parsed.dataset.into_iter().enumerate() {
        let location = format!("{source_name}: dataset #{}", i + 1);
        if desc.name.trim().is_empty() {
            return Err(DatasetError::Manifest {
                location,
                message: "dataset name must not be empty".into(),
            });
        }
        if !seen.insert(desc.name.clone()) {
            return Err(DatasetError::Manifest {
                location,
                message: format!("duplicate dataset name `{}`", desc.name),
            });
        }
        if desc.is_synthetic() != desc.synthetic.is_some() {
            return Err(DatasetError::Manifest {
                location,
                message: "a `synthetic` table goes together with path = \"synthetic\"".into(),
            });
        }
        desc.base_dir = base_dir.clone();
        out.push(desc);
    }
    Ok(out)
}

/// One row of the benchmark dataset table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegistryEntry {
    pub id: &'static str,
    pub name: &'static str,
    pub file: &'static str,
    pub n: usize,
    pub d: usize,
    pub data_type: &'static str,
    pub range: (f64, f64),
    pub label_columns: &'static [usize],
}

impl RegistryEntry {
    /// Descriptor for the file `file` under `$DIAMETER_DATA_DIR` (or the
    /// bundled copy for Iris). Files without known label columns are
    /// expected to hold feature columns only.
    pub fn descriptor(&self) -> DatasetDescriptor {
        let mut desc = DatasetDescriptor::csv(self.name, self.file);
        desc.expected_n = Some(self.n);
        desc.expected_d = Some(self.d);
        desc.declared_range = Some(self.range);
        desc.label_columns = self.label_columns.to_vec();
        if self.file == "iris.csv" {
            desc.base_dir = Some(bundled_data_dir());
        }
        desc
    }
}

macro_rules! entry {
    ($id:literal, $name:literal, $file:literal, $n:literal, $d:literal, $ty:literal, [$lo:literal, $hi:literal]) => {
        entry!($id, $name, $file, $n, $d, $ty, [$lo, $hi], [])
    };
    ($id:literal, $name:literal, $file:literal, $n:literal, $d:literal, $ty:literal, [$lo:literal, $hi:literal], [$($lab:literal),*]) => {
        RegistryEntry {
            id: $id,
            name: $name,
            file: $file,
            n: $n,
            d: $d,
            data_type: $ty,
            range: ($lo, $hi),
            label_columns: &[$($lab),*],
        }
    };
}

/// The 29 benchmark datasets with their published sizes and ranges. Only
/// Iris ships with the crate.
pub const REGISTRY: &[RegistryEntry] = &[
    entry!("D1", "iris", "iris.csv", 150, 4, "real", [0.1, 7.9], [4]),
    entry!(
        "D2",
        "haberman",
        "haberman.csv",
        306,
        3,
        "digits",
        [0.0, 83.0],
        [3]
    ),
    entry!("D3", "glass", "glass.csv", 214, 9, "real", [0.0, 75.41]),
    entry!("D4", "liver", "liver.csv", 345, 6, "digits", [0.0, 297.0]),
    entry!("D5", "balance", "balance.csv", 625, 4, "digits", [1.0, 5.0]),
    entry!(
        "D6",
        "wholesale",
        "wholesale.csv",
        440,
        7,
        "digits",
        [1.0, 112151.0]
    ),
    entry!("D7", "vowel", "vowel.csv", 528, 10, "real", [-5.211, 5.074]),
    entry!(
        "D8",
        "banknote",
        "banknote.csv",
        1372,
        4,
        "real",
        [-13.7731, 17.9274]
    ),
    entry!(
        "D9",
        "diabetes",
        "diabetes.csv",
        768,
        8,
        "real",
        [0.0, 846.0]
    ),
    entry!("D10", "cancer", "cancer.csv", 683, 9, "digits", [0.0, 9.0]),
    entry!("D11", "vote", "vote.csv", 399, 16, "digits", [0.0, 2.0]),
    entry!("D12", "heart", "heart.csv", 270, 25, "real", [0.0, 564.0]),
    entry!(
        "D13",
        "bcw",
        "bcw.csv",
        699,
        10,
        "digits",
        [1.0, 13454352.0]
    ),
    entry!(
        "D14",
        "monkey1",
        "monkey1.csv",
        556,
        17,
        "binary",
        [0.0, 1.0]
    ),
    entry!(
        "D15",
        "ionosphere",
        "ionosphere.csv",
        351,
        34,
        "real",
        [-1.0, 1.0]
    ),
    entry!("D16", "sonar", "sonar.csv", 208, 60, "real", [0.0, 1.0]),
    entry!(
        "D17",
        "vehicle",
        "vehicle.csv",
        846,
        18,
        "digits",
        [0.0, 1018.0]
    ),
    entry!(
        "D18",
        "german",
        "german.csv",
        1000,
        24,
        "digits",
        [0.0, 184.0]
    ),
    entry!(
        "D19",
        "phoneme",
        "phoneme.csv",
        5404,
        5,
        "real",
        [-1.82, 4.38]
    ),
    entry!(
        "D20",
        "parkinson",
        "parkinson.csv",
        1040,
        27,
        "real",
        [0.0, 1490.0]
    ),
    entry!(
        "D21",
        "australian",
        "australian.csv",
        690,
        42,
        "real",
        [0.0, 100001.0]
    ),
    entry!("D22", "qsar", "qsar.csv", 1055, 41, "real", [-5.256, 147.0]),
    entry!(
        "D23",
        "segmen",
        "segmen.csv",
        2310,
        19,
        "real",
        [-49.68, 1386.33]
    ),
    entry!(
        "D24",
        "waveform21",
        "waveform21.csv",
        5000,
        21,
        "real",
        [-4.2, 9.06]
    ),
    entry!(
        "D25",
        "waveform40",
        "waveform40.csv",
        5000,
        40,
        "real",
        [-3.97, 8.82]
    ),
    // published range is inverted; range checks are informational only
    entry!("D26", "eeg", "eeg.csv", 14980, 14, "real", [86.67, 72.0]),
    entry!(
        "D27",
        "letter-recognition",
        "letter-recognition.csv",
        20000,
        16,
        "digits",
        [0.0, 15.0]
    ),
    entry!(
        "D28",
        "nasa",
        "nasa.csv",
        40150,
        20,
        "real",
        [-1.33224, 1.8424]
    ),
    entry!(
        "D29",
        "colors",
        "colors.csv",
        112682,
        112,
        "real",
        [0.0, 1.0]
    ),
];

pub fn registry_entry(key: &str) -> Option<&'static RegistryEntry> {
    REGISTRY
        .iter()
        .find(|e| e.id.eq_ignore_ascii_case(key) || e.name.eq_ignore_ascii_case(key))
}

/// Directory holding the files bundled with this crate.
pub fn bundled_data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data")
}

const IRIS_CSV: &str = include_str!("../data/iris.csv");

/// The bundled Iris data (150 × 4, species label dropped).
pub fn iris() -> Dataset {
    let desc = registry_entry("iris")
        .expect("iris is registered")
        .descriptor();
    parse_csv(IRIS_CSV.as_bytes(), &desc, "iris.csv")
        .expect("bundled iris data is valid")
        .with_provenance("bundled:iris.csv")
}
