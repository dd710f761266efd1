//! Point storage and the Euclidean primitives everything else is built on.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("dataset must contain at least one point")]
    NoPoints,
    #[error("dataset must have at least one dimension")]
    NoDimensions,
    #[error("row {row} has {found} values, expected {expected}")]
    RaggedRow {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("non-finite value {value} at row {row}, column {column}")]
    NonFinite {
        row: usize,
        column: usize,
        value: f64,
    },
}

/// Index of a point inside a [`Dataset`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PointRef(usize);

impl PointRef {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl std::fmt::Display for PointRef {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// An immutable `n × d` matrix of finite reals, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    name: String,
    provenance: String,
    n: usize,
    d: usize,
    values: Vec<f64>,
}

impl Dataset {
    /// Builds a dataset from a flat row-major buffer of `n * d` values.
    pub fn from_flat(
        name: impl Into<String>,
        d: usize,
        values: Vec<f64>,
    ) -> Result<Self, GeomError> {
        if d == 0 {
            return Err(GeomError::NoDimensions);
        }
        if values.is_empty() {
            return Err(GeomError::NoPoints);
        }
        if !values.len().is_multiple_of(d) {
            let n = values.len() / d;
            return Err(GeomError::RaggedRow {
                row: n,
                found: values.len() % d,
                expected: d,
            });
        }
        if let Some(pos) = values.iter().position(|v| !v.is_finite()) {
            return Err(GeomError::NonFinite {
                row: pos / d,
                column: pos % d,
                value: values[pos],
            });
        }
        Ok(Self {
            name: name.into(),
            provenance: String::new(),
            n: values.len() / d,
            d,
            values,
        })
    }

    pub fn from_rows(name: impl Into<String>, rows: Vec<Vec<f64>>) -> Result<Self, GeomError> {
        let d = rows.first().map(Vec::len).ok_or(GeomError::NoPoints)?;
        if d == 0 {
            return Err(GeomError::NoDimensions);
        }
        let mut values = Vec::with_capacity(rows.len() * d);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != d {
                return Err(GeomError::RaggedRow {
                    row,
                    found: r.len(),
                    expected: d,
                });
            }
            values.extend_from_slice(r);
        }
        Self::from_flat(name, d, values)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_provenance(mut self, provenance: impl Into<String>) -> Self {
        self.provenance = provenance.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Where the data came from (file path, generator spec, ...). May be empty.
    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn d(&self) -> usize {
        self.d
    }

    /// Returns a reference to point `index`, or `None` if out of range.
    pub fn point(&self, index: usize) -> Option<PointRef> {
        (index < self.n).then_some(PointRef(index))
    }

    pub fn points(&self) -> impl Iterator<Item = PointRef> + '_ {
        (0..self.n).map(PointRef)
    }

    #[inline]
    pub fn row(&self, index: usize) -> &[f64] {
        &self.values[index * self.d..(index + 1) * self.d]
    }

    pub fn coords(&self, p: PointRef) -> &[f64] {
        self.row(p.0)
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> + '_ {
        self.values.chunks_exact(self.d)
    }

    #[inline]
    pub(crate) fn squared_distance_idx(&self, a: usize, b: usize) -> f64 {
        squared_euclidean(self.row(a), self.row(b))
    }

    pub fn squared_distance(&self, a: PointRef, b: PointRef) -> f64 {
        self.squared_distance_idx(a.0, b.0)
    }

    pub fn distance(&self, a: PointRef, b: PointRef) -> f64 {
        self.squared_distance(a, b).sqrt()
    }

    /// Distance of point `a` from the origin.
    pub fn l2_norm(&self, a: PointRef) -> f64 {
        self.coords(a).iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Per-dimension minima.
    pub fn column_minima(&self) -> Vec<f64> {
        let mut mins = self.row(0).to_vec();
        for row in self.rows().skip(1) {
            for (m, &v) in mins.iter_mut().zip(row) {
                if v < *m {
                    *m = v;
                }
            }
        }
        mins
    }

    /// Translates every point by the per-dimension minimum, so each column of
    /// the result has minimum exactly zero. Pairwise distances are preserved.
    pub fn min_shift(&self) -> Dataset {
        let mins = self.column_minima();
        let values = self
            .rows()
            .flat_map(|row| row.iter().zip(&mins).map(|(v, m)| v - m))
            .collect();
        Dataset {
            name: self.name.clone(),
            provenance: self.provenance.clone(),
            n: self.n,
            d: self.d,
            values,
        }
    }
}

#[inline]
pub fn squared_euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let diff = x - y;
            diff * diff
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_dataset(n: usize, d: usize, seed: u64) -> Dataset {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let values = (0..n * d).map(|_| rng.random_range(-50.0..50.0)).collect();
        Dataset::from_flat("random", d, values).unwrap()
    }

    fn p(ds: &Dataset, i: usize) -> PointRef {
        ds.point(i).unwrap()
    }

    #[test]
    fn three_four_five() {
        let ds = Dataset::from_rows("t", vec![vec![0.0, 0.0], vec![3.0, 4.0]]).unwrap();
        assert_eq!(ds.squared_distance(p(&ds, 0), p(&ds, 1)), 25.0);
        assert_eq!(ds.distance(p(&ds, 0), p(&ds, 1)), 5.0);
        assert_eq!(ds.distance(p(&ds, 1), p(&ds, 1)), 0.0);
        assert_eq!(ds.squared_distance(p(&ds, 0), p(&ds, 0)), 0.0);
        assert_eq!(ds.l2_norm(p(&ds, 1)), 5.0);
        assert_eq!(ds.l2_norm(p(&ds, 0)), 0.0);
    }

    #[test]
    fn norm_of_unit_four_vector() {
        let ds = Dataset::from_rows("t", vec![vec![1.0; 4], vec![0.0; 4]]).unwrap();
        assert_eq!(ds.l2_norm(p(&ds, 0)), 2.0);
        assert_eq!(ds.l2_norm(p(&ds, 1)), 0.0);
    }

    #[test]
    fn squared_matches_distance_squared() {
        let ds = random_dataset(16, 5, 11);
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..100 {
            let a = p(&ds, rng.random_range(0..16));
            let b = p(&ds, rng.random_range(0..16));
            // independent path: explicit loop with powi
            let mut acc = 0.0f64;
            for j in 0..ds.d() {
                acc += (ds.coords(a)[j] - ds.coords(b)[j]).powi(2);
            }
            let dist = ds.distance(a, b);
            let sq = ds.squared_distance(a, b);
            assert_eq!(sq, acc);
            let rel = (dist * dist - sq).abs() / sq.max(f64::MIN_POSITIVE);
            assert!(rel <= 4.0 * f64::EPSILON, "rel = {rel}");
        }
    }

    #[test]
    fn min_shift_examples() {
        let ds = Dataset::from_rows("t", vec![vec![-1.0, 2.0], vec![3.0, -4.0]]).unwrap();
        let s = ds.min_shift();
        assert_eq!(s.row(0), &[0.0, 6.0]);
        assert_eq!(s.row(1), &[4.0, 0.0]);
        // the source is untouched
        assert_eq!(ds.row(0), &[-1.0, 2.0]);

        let ds = Dataset::from_rows("t", vec![vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        let s = ds.min_shift();
        assert_eq!(s.row(0), &[0.0, 0.0]);
        assert_eq!(s.row(1), &[2.0, 2.0]);
    }

    #[test]
    fn min_shift_preserves_all_pairwise_distances() {
        let ds = random_dataset(32, 6, 3);
        let s = ds.min_shift();
        assert!(s.column_minima().iter().all(|&m| m == 0.0));
        let mut pairs = 0;
        for i in 0..32 {
            for j in (i + 1)..32 {
                let before = ds.distance(p(&ds, i), p(&ds, j));
                let after = s.distance(p(&s, i), p(&s, j));
                assert!(
                    (before - after).abs() <= 1e-12 * before,
                    "{before} vs {after}"
                );
                pairs += 1;
            }
        }
        assert_eq!(pairs, 496);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            Dataset::from_rows("t", vec![]).unwrap_err(),
            GeomError::NoPoints
        );
        assert_eq!(
            Dataset::from_rows("t", vec![vec![]]).unwrap_err(),
            GeomError::NoDimensions
        );
        assert!(matches!(
            Dataset::from_rows("t", vec![vec![1.0, 2.0], vec![1.0]]),
            Err(GeomError::RaggedRow {
                row: 1,
                found: 1,
                expected: 2
            })
        ));
        assert!(matches!(
            Dataset::from_rows("t", vec![vec![1.0, f64::NAN]]),
            Err(GeomError::NonFinite {
                row: 0,
                column: 1,
                ..
            })
        ));
        assert!(matches!(
            Dataset::from_rows("t", vec![vec![f64::INFINITY]]),
            Err(GeomError::NonFinite { .. })
        ));
        assert!(ds_point_out_of_range());
    }

    fn ds_point_out_of_range() -> bool {
        let ds = Dataset::from_rows("t", vec![vec![1.0]]).unwrap();
        ds.point(1).is_none() && ds.point(0).is_some()
    }
}
