//! Exact and greedy diameter algorithms.
//!
//! Every algorithm compares squared distances internally and takes one square
//! root when it reports. Scans run in ascending row order and only a strictly
//! larger distance replaces the current best, so the first pair encountered
//! wins ties.
//!
//! Counters follow the conventions used for comparing the methods:
//!
//! | algorithm | `iterations`                                   |
//! |-----------|------------------------------------------------|
//! | BF        | number of unordered pairs, `n(n-1)/2`          |
//! | A1        | always 2 (two selection passes)                |
//! | A2        | full scans, including the final non-improving one |
//! | A3        | 1 initial scan + dequeue-and-scan passes       |
//! | A4        | `B` initial scans + dequeue-and-scan passes    |
//!
//! `distance_evals` counts point-to-point distance computations; A1 also
//! counts its `n` norm evaluations.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::{Dataset, PointRef};
use crate::rng::RandomSource;

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 20_180_201;

/// Beam width used when the caller does not supply one.
pub const DEFAULT_BEAM_WIDTH: usize = 20;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DiameterError {
    #[error("dataset has {n} point(s); at least 2 are required")]
    DegenerateDataset { n: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Algorithm {
    #[serde(rename = "BF")]
    BruteForce,
    #[serde(rename = "A1")]
    MinMaxNorms,
    #[serde(rename = "A2")]
    HillClimbing,
    #[serde(rename = "A3")]
    TabuSearch,
    #[serde(rename = "A4")]
    BeamSearch,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::BruteForce,
        Algorithm::MinMaxNorms,
        Algorithm::HillClimbing,
        Algorithm::TabuSearch,
        Algorithm::BeamSearch,
    ];

    /// Short identifier used in reports: `BF`, `A1` .. `A4`.
    pub fn id(self) -> &'static str {
        match self {
            Algorithm::BruteForce => "BF",
            Algorithm::MinMaxNorms => "A1",
            Algorithm::HillClimbing => "A2",
            Algorithm::TabuSearch => "A3",
            Algorithm::BeamSearch => "A4",
        }
    }

    /// Name accepted on the command line.
    pub fn cli_name(self) -> &'static str {
        match self {
            Algorithm::BruteForce => "bf",
            Algorithm::MinMaxNorms => "norms",
            Algorithm::HillClimbing => "hc",
            Algorithm::TabuSearch => "tabu",
            Algorithm::BeamSearch => "beam",
        }
    }

    pub fn is_randomized(self) -> bool {
        matches!(
            self,
            Algorithm::HillClimbing | Algorithm::TabuSearch | Algorithm::BeamSearch
        )
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| s.eq_ignore_ascii_case(a.cli_name()) || s.eq_ignore_ascii_case(a.id()))
            .ok_or_else(|| format!("unknown algorithm `{s}` (expected bf|norms|hc|tabu|beam)"))
    }
}

/// Number of minimum- and maximum-norm candidates kept by the norms algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum KChoice {
    /// `ceil(log2 n)`, clamped to `[1, n]`.
    #[default]
    Auto,
    Fixed(usize),
}

impl FromStr for KChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("auto") {
            return Ok(KChoice::Auto);
        }
        match s.parse::<usize>() {
            Ok(0) => Err("k must be at least 1".into()),
            Ok(k) => Ok(KChoice::Fixed(k)),
            Err(_) => Err(format!(
                "invalid k `{s}` (expected a positive integer or `auto`)"
            )),
        }
    }
}

impl fmt::Display for KChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KChoice::Auto => f.write_str("auto"),
            KChoice::Fixed(k) => write!(f, "{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlgoConfig {
    pub k: KChoice,
    pub beam_width: usize,
    /// Slack for "same maximum distance" in tabu search, relative to
    /// `max(1, MAX)`. Zero means exact equality.
    pub tie_tolerance: f64,
    pub seed: u64,
}

impl Default for AlgoConfig {
    fn default() -> Self {
        Self {
            k: KChoice::Auto,
            beam_width: DEFAULT_BEAM_WIDTH,
            tie_tolerance: 0.0,
            seed: DEFAULT_SEED,
        }
    }
}

impl AlgoConfig {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_beam_width(mut self, beam_width: usize) -> Self {
        self.beam_width = beam_width;
        self
    }

    pub fn validate(&self) -> Result<(), DiameterError> {
        if self.beam_width < 1 {
            return Err(DiameterError::InvalidConfig(
                "beam width must be at least 1".into(),
            ));
        }
        if !(self.tie_tolerance >= 0.0 && self.tie_tolerance.is_finite()) {
            return Err(DiameterError::InvalidConfig(format!(
                "tie tolerance must be a finite non-negative number, got {}",
                self.tie_tolerance
            )));
        }
        if self.k == KChoice::Fixed(0) {
            return Err(DiameterError::InvalidConfig("k must be at least 1".into()));
        }
        Ok(())
    }
}

/// Outcome of one diameter computation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiameterResult {
    pub value: f64,
    pub pair: (PointRef, PointRef),
    pub iterations: u64,
    pub distance_evals: u64,
    pub algorithm: Algorithm,
    pub seed: Option<u64>,
}

/// Squared-distance function used by the algorithms. The default is
/// [`Euclidean`]; tests substitute counting wrappers.
pub trait DistanceKernel {
    fn squared(&self, ds: &Dataset, a: usize, b: usize) -> f64;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Euclidean;

impl DistanceKernel for Euclidean {
    #[inline]
    fn squared(&self, ds: &Dataset, a: usize, b: usize) -> f64 {
        ds.squared_distance_idx(a, b)
    }
}

impl<F> DistanceKernel for F
where
    F: Fn(&Dataset, usize, usize) -> f64,
{
    #[inline]
    fn squared(&self, ds: &Dataset, a: usize, b: usize) -> f64 {
        self(ds, a, b)
    }
}

struct Counted<'a, K> {
    ds: &'a Dataset,
    kernel: &'a K,
    evals: u64,
}

impl<'a, K: DistanceKernel> Counted<'a, K> {
    fn new(ds: &'a Dataset, kernel: &'a K) -> Self {
        Self {
            ds,
            kernel,
            evals: 0,
        }
    }

    #[inline]
    fn sq(&mut self, a: usize, b: usize) -> f64 {
        self.evals += 1;
        self.kernel.squared(self.ds, a, b)
    }

    /// Furthest point from `from` among points not marked in `skip`, under
    /// strict `>` starting from zero. `None` when every candidate coincides
    /// with `from`.
    fn furthest(&mut self, from: usize, skip: Option<&[bool]>) -> Option<(usize, f64)> {
        let mut best: Option<(usize, f64)> = None;
        let mut max = 0.0;
        for i in 0..self.ds.n() {
            if skip.is_some_and(|s| s[i]) {
                continue;
            }
            let d = self.sq(from, i);
            if d > max {
                max = d;
                best = Some((i, d));
            }
        }
        best
    }
}

fn require_pairs(ds: &Dataset) -> Result<(), DiameterError> {
    if ds.n() < 2 {
        Err(DiameterError::DegenerateDataset { n: ds.n() })
    } else {
        Ok(())
    }
}

/// Some index other than `p`, for the all-coincident case.
fn other_than(p: usize, n: usize) -> usize {
    (p + 1) % n
}

fn point(ds: &Dataset, i: usize) -> PointRef {
    ds.point(i)
        .expect("index issued by a scan over this dataset")
}

fn finish(
    ds: &Dataset,
    algorithm: Algorithm,
    seed: Option<u64>,
    pair: (usize, usize),
    best_sq: f64,
    iterations: u64,
    distance_evals: u64,
) -> DiameterResult {
    DiameterResult {
        value: best_sq.sqrt(),
        pair: (point(ds, pair.0), point(ds, pair.1)),
        iterations,
        distance_evals,
        algorithm,
        seed,
    }
}

/// `ceil(log2 n)` clamped to `[1, n]` for `Auto`, otherwise `min(k, n)`.
pub fn resolve_k(n: usize, cfg: &AlgoConfig) -> usize {
    let n = n.max(1);
    match cfg.k {
        KChoice::Auto => (n.next_power_of_two().trailing_zeros() as usize).clamp(1, n),
        KChoice::Fixed(k) => k.clamp(1, n),
    }
}

/// Exact diameter by comparing all `n(n-1)/2` unordered pairs.
pub fn brute_force(ds: &Dataset) -> Result<DiameterResult, DiameterError> {
    brute_force_with(ds, &Euclidean)
}

pub fn brute_force_with<K: DistanceKernel>(
    ds: &Dataset,
    kernel: &K,
) -> Result<DiameterResult, DiameterError> {
    require_pairs(ds)?;
    let n = ds.n();
    let mut sc = Counted::new(ds, kernel);
    let mut best = (0, 1);
    let mut max = f64::NEG_INFINITY;
    for i in 0..n {
        for j in (i + 1)..n {
            let d = sc.sq(i, j);
            if d > max {
                max = d;
                best = (i, j);
            }
        }
    }
    let pairs = (n as u64) * (n as u64 - 1) / 2;
    Ok(finish(
        ds,
        Algorithm::BruteForce,
        None,
        best,
        max,
        pairs,
        sc.evals,
    ))
}

/// Min/max-norm candidates: translate so every column's minimum is zero,
/// keep the `k` smallest-norm and `k` largest-norm points, then compare the
/// two candidate sets exhaustively. Deterministic.
pub fn minmax_norms(ds: &Dataset, cfg: &AlgoConfig) -> Result<DiameterResult, DiameterError> {
    minmax_norms_with(ds, cfg, &Euclidean)
}

/// As [`minmax_norms`]; `kernel` is evaluated against the translated dataset.
pub fn minmax_norms_with<K: DistanceKernel>(
    ds: &Dataset,
    cfg: &AlgoConfig,
    kernel: &K,
) -> Result<DiameterResult, DiameterError> {
    require_pairs(ds)?;
    cfg.validate()?;
    let n = ds.n();
    let k = resolve_k(n, cfg);
    let shifted = ds.min_shift();

    // squared norms order the same way as norms
    let norms: Vec<f64> = shifted
        .rows()
        .map(|r| r.iter().map(|v| v * v).sum())
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| norms[a].total_cmp(&norms[b]).then(a.cmp(&b)));

    let smallest = &order[..k];
    let largest: Vec<usize> = order[n - k..].iter().rev().copied().collect();

    let mut sc = Counted::new(&shifted, kernel);
    let mut best = (smallest[0], largest[0]);
    let mut max = f64::NEG_INFINITY;
    for &i in smallest {
        for &j in &largest {
            let d = sc.sq(i, j);
            // the two sets overlap when 2k > n; a point never pairs with itself
            if i != j && d > max {
                max = d;
                best = (i, j);
            }
        }
    }
    Ok(finish(
        ds,
        Algorithm::MinMaxNorms,
        None,
        best,
        max,
        2,
        n as u64 + sc.evals,
    ))
}

/// Greedy hill climbing from a random start: jump to the furthest point until
/// a full scan no longer improves the best distance.
pub fn hill_climbing(ds: &Dataset, cfg: &AlgoConfig) -> Result<DiameterResult, DiameterError> {
    hill_climbing_impl(ds, cfg, &Euclidean, None)
}

pub fn hill_climbing_with<K: DistanceKernel>(
    ds: &Dataset,
    cfg: &AlgoConfig,
    kernel: &K,
) -> Result<DiameterResult, DiameterError> {
    hill_climbing_impl(ds, cfg, kernel, None)
}

/// Runs hill climbing and also returns the maximum squared distance found by
/// each full scan, in order. All entries but the last are strictly increasing.
pub fn hill_climbing_traced(
    ds: &Dataset,
    cfg: &AlgoConfig,
) -> Result<(DiameterResult, Vec<f64>), DiameterError> {
    let mut trace = Vec::new();
    let res = hill_climbing_impl(ds, cfg, &Euclidean, Some(&mut trace))?;
    Ok((res, trace))
}

fn hill_climbing_impl<K: DistanceKernel>(
    ds: &Dataset,
    cfg: &AlgoConfig,
    kernel: &K,
    mut trace: Option<&mut Vec<f64>>,
) -> Result<DiameterResult, DiameterError> {
    require_pairs(ds)?;
    cfg.validate()?;
    let n = ds.n();
    let mut rng = RandomSource::new(cfg.seed);
    let mut sc = Counted::new(ds, kernel);
    let mut record = |v: f64| {
        if let Some(t) = trace.as_deref_mut() {
            t.push(v);
        }
    };

    let mut p1 = rng.uniform_index(n);
    let Some((mut p2, mut max)) = sc.furthest(p1, None) else {
        record(0.0);
        let pair = (p1, other_than(p1, n));
        return Ok(finish(
            ds,
            Algorithm::HillClimbing,
            Some(cfg.seed),
            pair,
            0.0,
            1,
            sc.evals,
        ));
    };
    record(max);
    let mut scans = 1u64;

    loop {
        let next = sc.furthest(p2, None);
        scans += 1;
        let max2 = next.map_or(0.0, |(_, d)| d);
        record(max2);
        match next {
            Some((p3, d)) if d > max => {
                p1 = p2;
                p2 = p3;
                max = d;
            }
            _ => break,
        }
    }
    Ok(finish(
        ds,
        Algorithm::HillClimbing,
        Some(cfg.seed),
        (p1, p2),
        max,
        scans,
        sc.evals,
    ))
}

#[inline]
fn ties(d: f64, max: f64, tolerance: f64) -> bool {
    if tolerance == 0.0 {
        d == max
    } else {
        let (d, max) = (d.sqrt(), max.sqrt());
        (d - max).abs() <= tolerance * max.max(1.0)
    }
}

/// Tabu search: like hill climbing, but every point tied at the current
/// maximum distance is queued, and a visited set keeps points from being
/// scanned (or scanned against) twice.
pub fn tabu_search(ds: &Dataset, cfg: &AlgoConfig) -> Result<DiameterResult, DiameterError> {
    tabu_search_with(ds, cfg, &Euclidean)
}

pub fn tabu_search_with<K: DistanceKernel>(
    ds: &Dataset,
    cfg: &AlgoConfig,
    kernel: &K,
) -> Result<DiameterResult, DiameterError> {
    require_pairs(ds)?;
    cfg.validate()?;
    let n = ds.n();
    let tol = cfg.tie_tolerance;
    let mut rng = RandomSource::new(cfg.seed);
    let mut sc = Counted::new(ds, kernel);

    let p1 = rng.uniform_index(n);
    let mut max = 0.0;
    let mut best: Option<(usize, usize)> = None;
    let mut distances = vec![0.0; n];
    for (i, slot) in distances.iter_mut().enumerate() {
        let d = sc.sq(p1, i);
        *slot = d;
        if d > max {
            max = d;
            best = Some((p1, i));
        }
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&i| ties(distances[i], max, tol)).collect();

    let mut visited = vec![false; n];
    let mut passes = 0u64;
    while let Some(p3) = queue.pop_front() {
        if visited[p3] {
            continue;
        }
        visited[p3] = true;
        passes += 1;
        // only points scanned in this pass may be queued
        distances.fill(0.0);
        for i in 0..n {
            if visited[i] {
                continue;
            }
            let d = sc.sq(p3, i);
            distances[i] = d;
            if d > max {
                max = d;
                best = Some((p3, i));
            }
        }
        queue.extend((0..n).filter(|&i| !visited[i] && ties(distances[i], max, tol)));
    }

    let pair = best.unwrap_or((p1, other_than(p1, n)));
    Ok(finish(
        ds,
        Algorithm::TabuSearch,
        Some(cfg.seed),
        pair,
        max,
        1 + passes,
        sc.evals,
    ))
}

/// Beam search: `B` random starts each contribute their furthest point to a
/// shared queue; the queue is then drained with a shared visited set, and a
/// point is re-queued whenever it improves the global best.
pub fn beam_search(ds: &Dataset, cfg: &AlgoConfig) -> Result<DiameterResult, DiameterError> {
    beam_search_with(ds, cfg, &Euclidean)
}

pub fn beam_search_with<K: DistanceKernel>(
    ds: &Dataset,
    cfg: &AlgoConfig,
    kernel: &K,
) -> Result<DiameterResult, DiameterError> {
    require_pairs(ds)?;
    cfg.validate()?;
    let mut rng = RandomSource::new(cfg.seed);
    let starts: Vec<usize> = (0..cfg.beam_width)
        .map(|_| rng.uniform_index(ds.n()))
        .collect();
    let mut res = beam_from(ds, &starts, kernel);
    res.seed = Some(cfg.seed);
    Ok(res)
}

/// Beam search from explicit starting points instead of random draws.
pub fn beam_search_from_starts(
    ds: &Dataset,
    starts: &[PointRef],
) -> Result<DiameterResult, DiameterError> {
    require_pairs(ds)?;
    if starts.is_empty() {
        return Err(DiameterError::InvalidConfig(
            "beam search needs at least one starting point".into(),
        ));
    }
    let starts: Vec<usize> = starts.iter().map(|p| p.index()).collect();
    Ok(beam_from(ds, &starts, &Euclidean))
}

fn beam_from<K: DistanceKernel>(ds: &Dataset, starts: &[usize], kernel: &K) -> DiameterResult {
    let n = ds.n();
    let mut sc = Counted::new(ds, kernel);
    let mut max = 0.0;
    let mut best: Option<(usize, usize)> = None;
    let mut queue = VecDeque::with_capacity(starts.len());

    for &s in starts {
        let mut local_max = 0.0;
        let mut furthest = None;
        for i in 0..n {
            let d = sc.sq(s, i);
            if d > local_max {
                local_max = d;
                furthest = Some(i);
            }
            if d > max {
                max = d;
                best = Some((s, i));
            }
        }
        if let Some(f) = furthest {
            queue.push_back(f);
        }
    }

    let mut visited = vec![false; n];
    let mut passes = 0u64;
    while let Some(p3) = queue.pop_front() {
        if visited[p3] {
            continue;
        }
        visited[p3] = true;
        passes += 1;
        let mut improved = None;
        for i in (0..n).filter(|&i| !visited[i]) {
            let d = sc.sq(p3, i);
            if d > max {
                max = d;
                best = Some((p3, i));
                improved = Some(i);
            }
        }
        if let Some(p) = improved {
            queue.push_back(p);
        }
    }

    let pair = best.unwrap_or((starts[0], other_than(starts[0], n)));
    finish(
        ds,
        Algorithm::BeamSearch,
        None,
        pair,
        max,
        starts.len() as u64 + passes,
        sc.evals,
    )
}

/// Runs `algorithm` with `cfg`.
pub fn run(
    algorithm: Algorithm,
    ds: &Dataset,
    cfg: &AlgoConfig,
) -> Result<DiameterResult, DiameterError> {
    match algorithm {
        Algorithm::BruteForce => brute_force(ds),
        Algorithm::MinMaxNorms => minmax_norms(ds, cfg),
        Algorithm::HillClimbing => hill_climbing(ds, cfg),
        Algorithm::TabuSearch => tabu_search(ds, cfg),
        Algorithm::BeamSearch => beam_search(ds, cfg),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(rows: Vec<Vec<f64>>) -> Dataset {
        Dataset::from_rows("t", rows).unwrap()
    }

    fn two_points() -> Dataset {
        ds(vec![vec![0.0, 0.0], vec![3.0, 4.0]])
    }

    #[test]
    fn resolve_k_cases() {
        let auto = AlgoConfig::default();
        assert_eq!(resolve_k(150, &auto), 8);
        assert_eq!(resolve_k(1, &auto), 1);
        assert_eq!(resolve_k(2, &auto), 1);
        assert_eq!(resolve_k(3, &auto), 2);
        assert_eq!(resolve_k(4, &auto), 2);
        assert_eq!(resolve_k(5, &auto), 3);
        assert_eq!(resolve_k(1 << 20, &auto), 20);
        let fixed = AlgoConfig {
            k: KChoice::Fixed(100),
            ..AlgoConfig::default()
        };
        assert_eq!(resolve_k(2, &fixed), 2);
        assert_eq!(resolve_k(1000, &fixed), 100);
    }

    #[test]
    fn resolve_k_matches_float_log2() {
        let auto = AlgoConfig::default();
        for n in 2..5000usize {
            let expected = ((n as f64).log2().ceil() as usize).clamp(1, n);
            assert_eq!(resolve_k(n, &auto), expected, "n = {n}");
        }
    }

    #[test]
    fn two_points_everywhere() {
        let d = two_points();
        let cfg = AlgoConfig::default();
        for alg in Algorithm::ALL {
            let r = run(alg, &d, &cfg).unwrap();
            assert_eq!(r.value, 5.0, "{alg}");
            assert_ne!(r.pair.0, r.pair.1, "{alg}");
        }
        assert_eq!(brute_force(&d).unwrap().iterations, 1);
        let hc = hill_climbing(&d, &cfg).unwrap();
        assert_eq!(hc.iterations, 2);
        assert_eq!(hc.distance_evals, 4);
    }

    #[test]
    fn degenerate_inputs() {
        let one = ds(vec![vec![1.0, 2.0]]);
        let cfg = AlgoConfig::default();
        for alg in Algorithm::ALL {
            assert_eq!(
                run(alg, &one, &cfg).unwrap_err(),
                DiameterError::DegenerateDataset { n: 1 }
            );
        }
        let bad = AlgoConfig::default().with_beam_width(0);
        assert!(matches!(
            beam_search(&two_points(), &bad),
            Err(DiameterError::InvalidConfig(_))
        ));
        let neg = AlgoConfig {
            tie_tolerance: -1.0,
            ..AlgoConfig::default()
        };
        assert!(tabu_search(&two_points(), &neg).is_err());
    }

    #[test]
    fn identical_points_give_zero_with_distinct_pair() {
        let d = ds(vec![vec![1.5, -2.0]; 5]);
        for seed in 0..10 {
            let cfg = AlgoConfig::default().with_seed(seed);
            for alg in Algorithm::ALL {
                let r = run(alg, &d, &cfg).unwrap();
                assert_eq!(r.value, 0.0);
                assert_ne!(r.pair.0, r.pair.1, "{alg} seed {seed}");
            }
        }
    }

    #[test]
    fn brute_force_first_pair_wins_ties() {
        // unit square: both diagonals have length sqrt(2)
        let d = ds(vec![
            vec![0.0, 0.0],
            vec![1.0, 0.0],
            vec![0.0, 1.0],
            vec![1.0, 1.0],
        ]);
        let r = brute_force(&d).unwrap();
        assert_eq!((r.pair.0.index(), r.pair.1.index()), (0, 3));
        assert_eq!(r.iterations, 6);
        assert_eq!(r.distance_evals, 6);
    }

    #[test]
    fn minmax_norms_counts_and_shift() {
        // negative coordinates: without the shift, (-3,0) and (3,0) share a norm
        let d = ds(vec![
            vec![-3.0, 0.0],
            vec![3.0, 0.0],
            vec![0.0, 1.0],
            vec![0.5, 0.5],
        ]);
        let r = minmax_norms(&d, &AlgoConfig::default()).unwrap();
        assert_eq!(r.iterations, 2);
        // k = 2 for n = 4
        assert_eq!(r.distance_evals, 4 + 4);
        assert_eq!(r.value, 6.0);
        assert_eq!(r.seed, None);
    }

    #[test]
    fn minmax_norms_is_seed_independent() {
        let d = ds((0..20)
            .map(|i| vec![(i as f64 * 1.7).sin(), (i as f64 * 0.3).cos() * 4.0])
            .collect());
        let a = minmax_norms(&d, &AlgoConfig::default().with_seed(1)).unwrap();
        let b = minmax_norms(&d, &AlgoConfig::default().with_seed(999)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn hill_climbing_trace_shape() {
        let d = ds((0..30)
            .map(|i| vec![(i as f64).sqrt(), ((i * 7) % 11) as f64])
            .collect());
        for seed in 0..20 {
            let (r, trace) =
                hill_climbing_traced(&d, &AlgoConfig::default().with_seed(seed)).unwrap();
            assert_eq!(trace.len() as u64, r.iterations);
            assert!(trace.len() >= 2);
            for w in trace[..trace.len() - 1].windows(2) {
                assert!(w[1] > w[0]);
            }
            assert!(trace[trace.len() - 1] <= trace[trace.len() - 2]);
            assert_eq!(r.value, trace[trace.len() - 2].sqrt());
        }
    }

    #[test]
    fn tabu_queues_all_ties() {
        // plus shape: from the centre all four arms tie at distance 2
        let d = ds(vec![
            vec![0.0, 0.0],
            vec![2.0, 0.0],
            vec![-2.0, 0.0],
            vec![0.0, 2.0],
            vec![0.0, -2.0],
        ]);
        let mut saw_centre_start = false;
        for seed in 0..40 {
            let r = tabu_search(&d, &AlgoConfig::default().with_seed(seed)).unwrap();
            assert_eq!(r.value, 4.0);
            // only a centre start queues four points, giving more than 3 passes
            saw_centre_start |= r.iterations > 4;
            assert!(r.iterations - 1 <= 5);
        }
        assert!(saw_centre_start);
    }

    #[test]
    fn tabu_tolerance_widens_ties() {
        // weight-2 binary vectors have several furthest points at distance 2;
        // small noise breaks the exact ties and a tolerance restores them
        let mut rows = Vec::new();
        for a in 0..6 {
            for b in (a + 1)..6 {
                let mut r = vec![0.0; 6];
                r[a] = 1.0;
                r[b] = 1.0;
                rows.push(r);
            }
        }
        let noisy: Vec<Vec<f64>> = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                r.iter()
                    .enumerate()
                    .map(|(j, v)| v + 1e-7 * ((7 * i + 3 * j) as f64).sin())
                    .collect()
            })
            .collect();
        let d = ds(noisy);
        let loose_cfg = AlgoConfig {
            tie_tolerance: 1e-5,
            ..AlgoConfig::default()
        };
        let mut wider = 0;
        for seed in 0..20 {
            let strict = tabu_search(&d, &AlgoConfig::default().with_seed(seed)).unwrap();
            let loose = tabu_search(&d, &loose_cfg.clone().with_seed(seed)).unwrap();
            assert!(loose.iterations >= strict.iterations);
            wider += usize::from(loose.iterations > strict.iterations);
        }
        assert!(wider >= 15, "{wider}");
    }

    #[test]
    fn beam_width_one_is_bounded() {
        let d = ds((0..40)
            .map(|i| vec![(i as f64 * 0.37).sin() * 10.0, (i as f64 * 1.3).cos()])
            .collect());
        let exact = brute_force(&d).unwrap().value;
        for seed in 0..20 {
            let r = beam_search(
                &d,
                &AlgoConfig::default().with_seed(seed).with_beam_width(1),
            )
            .unwrap();
            assert!(r.value <= exact);
            assert!(r.iterations >= 1);
        }
    }

    #[test]
    fn beam_from_every_start_is_exact() {
        let d = ds((0..25)
            .map(|i| vec![((i * 13) % 7) as f64, ((i * 5) % 9) as f64, (i % 4) as f64])
            .collect());
        let starts: Vec<PointRef> = d.points().collect();
        let r = beam_search_from_starts(&d, &starts).unwrap();
        assert_eq!(r.value, brute_force(&d).unwrap().value);
        assert!(beam_search_from_starts(&d, &[]).is_err());
    }

    #[test]
    fn algorithm_names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.cli_name().parse::<Algorithm>().unwrap(), a);
            assert_eq!(a.id().parse::<Algorithm>().unwrap(), a);
        }
        assert!("dfs".parse::<Algorithm>().is_err());
        assert_eq!("auto".parse::<KChoice>().unwrap(), KChoice::Auto);
        assert_eq!("7".parse::<KChoice>().unwrap(), KChoice::Fixed(7));
        assert!("0".parse::<KChoice>().is_err());
    }
}
