//! Furthest-pair (diameter) computation for point sets in d-dimensional
//! Euclidean space.
//!
//! The crate provides an exact all-pairs oracle and four greedy
//! approximations (min/max norms, hill climbing, tabu search, beam search),
//! each instrumented with iteration and distance-evaluation counters. On top
//! of those sit closed-form operation-count models for a set of published
//! (1+ε)-approximation methods, the accuracy/efficiency metrics used to
//! compare everything, CSV/manifest ingestion, and an experiment runner with
//! table, CSV and JSON reports.
//!
//! ```
//! use diameter_core::{algos, AlgoConfig, Dataset};
//!
//! let ds = Dataset::from_rows("square", vec![
//!     vec![0.0, 0.0],
//!     vec![1.0, 0.0],
//!     vec![0.0, 1.0],
//!     vec![1.0, 1.0],
//! ]).unwrap();
//! let exact = algos::brute_force(&ds).unwrap();
//! let approx = algos::hill_climbing(&ds, &AlgoConfig::default()).unwrap();
//! assert!(approx.value <= exact.value);
//! assert!((exact.value - 2f64.sqrt()).abs() < 1e-12);
//! ```

pub mod algos;
pub mod bench;
pub mod cost;
pub mod dataset;
pub mod geom;
pub mod metrics;
pub mod rng;

pub use algos::{AlgoConfig, Algorithm, DiameterError, DiameterResult, KChoice};
pub use geom::{Dataset, GeomError, PointRef};
pub use rng::RandomSource;
