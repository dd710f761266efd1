//! Accuracy and efficiency scores.
//!
//! * approximation = actual − output (an absolute gap)
//! * accuracy = 1 − approximation / actual
//! * efficiency = accuracy / (1 + T(A) / T(BF))
//!
//! `T` may be wall-clock time or an operation count, as long as both sides
//! use the same unit; [`CostBasis`] records which.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MetricsError {
    #[error("actual diameter must be positive and finite, got {0}")]
    InvalidActual(f64),
    #[error("output diameter must be non-negative and finite, got {0}")]
    InvalidOutput(f64),
    #[error("cost must be positive and finite, got {0}")]
    InvalidTime(f64),
    #[error("accuracy must be finite, got {0}")]
    InvalidAccuracy(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CostBasis {
    WallTime,
    OpCount,
}

impl CostBasis {
    pub fn label(self) -> &'static str {
        match self {
            CostBasis::WallTime => "time",
            CostBasis::OpCount => "ops",
        }
    }
}

impl fmt::Display for CostBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for CostBasis {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "time" | "wall_time" => Ok(CostBasis::WallTime),
            "ops" | "op_count" => Ok(CostBasis::OpCount),
            _ => Err(format!("unknown basis `{s}` (expected time|ops)")),
        }
    }
}

/// Something worth flagging about a score without rejecting it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Diagnostic {
    /// The output exceeded the reference diameter (numerical noise); the
    /// approximation was clamped to zero.
    OutputExceedsActual { excess: f64 },
    /// An assumed absolute error larger than the diameter itself.
    NegativeAccuracy { accuracy: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AccuracyScore {
    pub approximation: f64,
    pub accuracy: f64,
    pub diagnostic: Option<Diagnostic>,
}

pub fn accuracy(actual: f64, output: f64) -> Result<AccuracyScore, MetricsError> {
    if !(actual > 0.0 && actual.is_finite()) {
        return Err(MetricsError::InvalidActual(actual));
    }
    if !(output >= 0.0 && output.is_finite()) {
        return Err(MetricsError::InvalidOutput(output));
    }
    let gap = actual - output;
    let (approximation, diagnostic) = if gap < 0.0 {
        (0.0, Some(Diagnostic::OutputExceedsActual { excess: -gap }))
    } else {
        (gap, None)
    };
    Ok(AccuracyScore {
        approximation,
        accuracy: 1.0 - approximation / actual,
        diagnostic,
    })
}

/// Accuracy of a method that is only known to be off by at most `epsilon`,
/// taken as an absolute gap.
pub fn assumed_accuracy(actual: f64, epsilon: f64) -> Result<AccuracyScore, MetricsError> {
    if !(actual > 0.0 && actual.is_finite()) {
        return Err(MetricsError::InvalidActual(actual));
    }
    let acc = 1.0 - epsilon / actual;
    Ok(AccuracyScore {
        approximation: epsilon,
        accuracy: acc,
        diagnostic: (acc < 0.0).then_some(Diagnostic::NegativeAccuracy { accuracy: acc }),
    })
}

pub fn efficiency(accuracy: f64, t_algorithm: f64, t_bf: f64) -> Result<f64, MetricsError> {
    if !accuracy.is_finite() {
        return Err(MetricsError::InvalidAccuracy(accuracy));
    }
    for t in [t_algorithm, t_bf] {
        if !(t > 0.0 && t.is_finite()) {
            return Err(MetricsError::InvalidTime(t));
        }
    }
    Ok(accuracy / (1.0 + t_algorithm / t_bf))
}

/// A fully scored algorithm output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Evaluation {
    pub actual_diameter: f64,
    pub output_diameter: f64,
    pub approximation: f64,
    pub accuracy: f64,
    pub t_algorithm: f64,
    pub t_bf: f64,
    pub basis: CostBasis,
    pub efficiency: f64,
    pub diagnostic: Option<Diagnostic>,
}

impl Evaluation {
    pub fn new(
        actual: f64,
        output: f64,
        t_algorithm: f64,
        t_bf: f64,
        basis: CostBasis,
    ) -> Result<Self, MetricsError> {
        let score = accuracy(actual, output)?;
        let eff = efficiency(score.accuracy, t_algorithm, t_bf)?;
        Ok(Self {
            actual_diameter: actual,
            output_diameter: output,
            approximation: score.approximation,
            accuracy: score.accuracy,
            t_algorithm,
            t_bf,
            basis,
            efficiency: eff,
            diagnostic: score.diagnostic,
        })
    }
}
