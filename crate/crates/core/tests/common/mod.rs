#![allow(dead_code)]

use diameter_core::dataset::{generate_synthetic, Distribution, SyntheticSpec};
use diameter_core::Dataset;

/// Exact diameter by the most literal route: a sqrt per pair, keep the largest.
pub fn naive_diameter(ds: &Dataset) -> f64 {
    let mut best = 0.0f64;
    for i in 0..ds.n() {
        for j in (i + 1)..ds.n() {
            let mut acc = 0.0f64;
            for (a, b) in ds.row(i).iter().zip(ds.row(j)) {
                acc += (a - b).powi(2);
            }
            let dist = acc.sqrt();
            if dist > best {
                best = dist;
            }
        }
    }
    best
}

/// Corpus member `i`: n in [2, 64], d in [1, 8], cycling through the three
/// generators.
pub fn corpus_dataset(i: u64) -> Dataset {
    let n = 2 + (i.wrapping_mul(2_654_435_761) % 63) as usize;
    let d = 1 + (i.wrapping_mul(40_503) % 8) as usize;
    let (distribution, low, high) = match i % 3 {
        0 => (Distribution::UniformReal, -100.0, 100.0),
        1 => (Distribution::UniformInteger, 0.0, 9.0),
        _ => (Distribution::Bernoulli, 0.0, 1.0),
    };
    generate_synthetic(&SyntheticSpec {
        n,
        d,
        low,
        high,
        distribution,
        seed: 1_000 + i,
    })
    .expect("corpus specs are valid")
}

pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(f64::MIN_POSITIVE)
}

pub fn median(mut v: Vec<u64>) -> f64 {
    v.sort_unstable();
    let m = v.len() / 2;
    if v.len().is_multiple_of(2) {
        (v[m - 1] + v[m]) as f64 / 2.0
    } else {
        v[m] as f64
    }
}

/// Columns of the operation-count table: name, n, d.
pub const OPS_DATASETS: [(&str, u64, u64); 7] = [
    ("D1", 150, 4),
    ("D16", 208, 60),
    ("D19", 5404, 5),
    ("D25", 5000, 40),
    ("D27", 20000, 16),
    ("D28", 40150, 20),
    ("D29", 112682, 112),
];

/// Published operation counts, rows M1..M8, BF, A1, A2, A3, A4 in the
/// column order of [`OPS_DATASETS`].
pub const OPS_TABLE: [(&str, [f64; 7]); 13] = [
    (
        "M1",
        [
            1.54E+02, 2.88E+17, 5.41E+03, 2.75E+11, 3.64E+04, 3.02E+05, 1.30E+33,
        ],
    ),
    (
        "M2",
        [
            3.07E+03, 1.22E+12, 2.68E+05, 4.56E+10, 5.17E+07, 4.45E+08, 9.64E+22,
        ],
    ),
    (
        "M3",
        [
            1.31E+05, 3.33E+05, 3.04E+08, 3.07E+08, 5.72E+09, 2.47E+10, 2.13E+11,
        ],
    ),
    (
        "M4",
        [
            1.13E+04, 2.16E+04, 1.46E+07, 1.25E+07, 2.00E+08, 8.06E+08, 6.35E+09,
        ],
    ),
    (
        "M5",
        [
            2.68E+04, 1.39E+05, 2.95E+07, 2.75E+07, 4.05E+08, 1.62E+09, 1.29E+10,
        ],
    ),
    (
        "M6",
        [
            1.56E+02, 4.08E+17, 5.42E+03, 3.89E+11, 4.32E+04, 4.11E+05, 1.84E+33,
        ],
    ),
    (
        "M7",
        [
            1.73E+02, 4.38E+26, 5.47E+03, 4.08E+17, 5.95E+06, 3.80E+08, 1.32E+50,
        ],
    ),
    (
        "M8",
        [
            1.73E+02, 4.38E+26, 5.47E+03, 4.08E+17, 5.95E+06, 3.80E+08, 1.32E+50,
        ],
    ),
    (
        "BF",
        [
            4.47E+04, 1.29E+06, 7.30E+07, 5.00E+08, 3.20E+09, 1.61E+10, 7.11E+11,
        ],
    ),
    (
        "A1",
        [
            2.98E+03, 1.92E+04, 1.62E+05, 3.29E+05, 8.95E+05, 2.04E+06, 1.64E+07,
        ],
    ),
    (
        "A2",
        [
            2.40E+03, 3.74E+04, 8.11E+04, 8.00E+05, 9.60E+05, 3.21E+06, 3.79E+07,
        ],
    ),
    (
        "A3",
        [
            2.40E+03, 4.99E+04, 1.08E+05, 8.00E+05, 1.28E+06, 3.21E+06, 2.30E+09,
        ],
    ),
    (
        "A4",
        [
            1.50E+04, 3.37E+05, 7.84E+05, 6.20E+06, 8.96E+06, 2.17E+07, 3.91E+08,
        ],
    ),
];

/// Published diameters (BF, A1, A2, A3, A4) for the same seven datasets.
pub const DIAMETERS: [[f64; 5]; 7] = [
    [7.09, 7.09, 7.09, 7.09, 7.09],
    [3.53, 2.81, 3.53, 3.06, 3.53],
    [6.17, 5.49, 5.69, 5.97, 6.17],
    [23.8, 20.9, 23.8, 23.8, 23.8],
    [33.4, 33.1, 33.4, 33.4, 33.4],
    [2.83, 2.55, 2.83, 2.83, 2.83],
    [1.41, 1.41, 1.41, 1.41, 1.41],
];

/// Published efficiencies, rows BF, M1..M8, A1..A4.
pub const EFFICIENCY_TABLE: [(&str, [f64; 7]); 13] = [
    ("BF", [0.500, 0.500, 0.500, 0.500, 0.500, 0.500, 0.500]),
    ("M1", [0.926, 0.000, 0.919, 0.002, 0.985, 0.823, 0.000]),
    ("M2", [0.870, 0.000, 0.916, 0.011, 0.969, 0.801, 0.000]),
    ("M3", [0.237, 0.682, 0.178, 0.606, 0.354, 0.325, 0.497]),
    ("M4", [0.743, 0.844, 0.766, 0.955, 0.927, 0.784, 0.641]),
    ("M5", [0.581, 0.775, 0.654, 0.928, 0.874, 0.748, 0.635]),
    ("M6", [0.926, 0.000, 0.919, 0.001, 0.985, 0.823, 0.000]),
    ("M7", [0.926, 0.000, 0.919, 0.000, 0.983, 0.804, 0.000]),
    ("M8", [0.926, 0.000, 0.919, 0.000, 0.983, 0.804, 0.000]),
    ("A1", [0.938, 0.783, 0.888, 0.877, 0.990, 0.901, 1.000]),
    ("A2", [0.949, 0.972, 0.922, 0.998, 1.000, 1.000, 1.000]),
    ("A3", [0.949, 0.834, 0.966, 0.998, 1.000, 0.999, 0.997]),
    ("A4", [0.749, 0.793, 0.989, 0.988, 0.997, 0.999, 0.999]),
];

pub fn ops_row(label: &str) -> [f64; 7] {
    OPS_TABLE
        .iter()
        .find(|(l, _)| *l == label)
        .map(|(_, r)| *r)
        .expect("known row label")
}
