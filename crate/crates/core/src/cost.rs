//! Closed-form operation counts.
//!
//! `M1`..`M8` are the complexity bounds of published (1+ε)-approximation
//! diameter methods evaluated with every big-O constant set to 1. They are a
//! hardware-independent cost proxy, not runtime predictions. `BF`, `A1` and
//! `GREEDY` give the operation counts of the algorithms in [`crate::algos`].
//!
//! All logarithms are base 2.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CostError {
    #[error("invalid cost-model input: {0}")]
    InvalidInput(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CostMethod {
    /// `n + ε^-(d-2)`
    M1,
    /// `n · ε^((1-d)/2) · log n`
    M2,
    /// `n^(2-α) · (log n)^(1-α)`, `α = 2^-(d+1)`
    M3,
    /// `n · m`
    M4,
    /// `d·n·log n + n²`
    M5,
    /// `n + ε^-(d-3/2)`
    M6,
    /// `n + ε^-(3(d-1)/2)`
    M7,
    /// `(n + ε^-(3(d-1)/2)) · log(1/ε)`
    M8,
    /// `d · n(n-1)/2`
    BF,
    /// `n·d + 2n·log n + d·(log n)²`
    A1,
    /// `iterations · n · d` (hill climbing, tabu and beam search)
    #[serde(rename = "GREEDY")]
    Greedy,
}

impl CostMethod {
    pub const LITERATURE: [CostMethod; 8] = [
        CostMethod::M1,
        CostMethod::M2,
        CostMethod::M3,
        CostMethod::M4,
        CostMethod::M5,
        CostMethod::M6,
        CostMethod::M7,
        CostMethod::M8,
    ];

    pub fn label(self) -> &'static str {
        match self {
            CostMethod::M1 => "M1",
            CostMethod::M2 => "M2",
            CostMethod::M3 => "M3",
            CostMethod::M4 => "M4",
            CostMethod::M5 => "M5",
            CostMethod::M6 => "M6",
            CostMethod::M7 => "M7",
            CostMethod::M8 => "M8",
            CostMethod::BF => "BF",
            CostMethod::A1 => "A1",
            CostMethod::Greedy => "GREEDY",
        }
    }

    /// Whether the formula depends on ε.
    pub fn uses_epsilon(self) -> bool {
        matches!(
            self,
            CostMethod::M1 | CostMethod::M2 | CostMethod::M6 | CostMethod::M7 | CostMethod::M8
        )
    }
}

impl fmt::Display for CostMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for CostMethod {
    type Err = CostError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let all = CostMethod::LITERATURE.into_iter().chain([
            CostMethod::BF,
            CostMethod::A1,
            CostMethod::Greedy,
        ]);
        for m in all {
            if s.eq_ignore_ascii_case(m.label()) {
                return Ok(m);
            }
        }
        Err(CostError::InvalidInput(format!(
            "unknown cost method `{s}`"
        )))
    }
}

pub const DEFAULT_EPSILON: f64 = 0.5;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CostInputs {
    pub n: u64,
    pub d: u64,
    pub epsilon: f64,
    /// Iteration count of M4; defaults to `n/2` rounded to nearest.
    pub m: Option<u64>,
    /// Observed iterations, required by [`CostMethod::Greedy`].
    pub iterations: Option<u64>,
    pub beam_width: Option<u64>,
}

impl CostInputs {
    pub fn new(n: u64, d: u64) -> Self {
        Self {
            n,
            d,
            epsilon: DEFAULT_EPSILON,
            m: None,
            iterations: None,
            beam_width: None,
        }
    }

    pub fn with_epsilon(mut self, epsilon: f64) -> Self {
        self.epsilon = epsilon;
        self
    }

    pub fn with_m(mut self, m: u64) -> Self {
        self.m = Some(m);
        self
    }

    pub fn with_iterations(mut self, iterations: u64) -> Self {
        self.iterations = Some(iterations);
        self
    }

    pub fn resolved_m(&self) -> u64 {
        self.m.unwrap_or(self.n.div_ceil(2))
    }

    pub fn validate(&self) -> Result<(), CostError> {
        if self.n == 0 || self.d == 0 {
            return Err(CostError::InvalidInput(format!(
                "n and d must be positive (n = {}, d = {})",
                self.n, self.d
            )));
        }
        if !(self.epsilon > 0.0 && self.epsilon <= 1.0) {
            return Err(CostError::InvalidInput(format!(
                "epsilon must lie in (0, 1], got {}",
                self.epsilon
            )));
        }
        let m = self.resolved_m();
        if m == 0 || m > self.n {
            return Err(CostError::InvalidInput(format!(
                "m must lie in [1, n] (m = {m}, n = {})",
                self.n
            )));
        }
        if self.iterations == Some(0) {
            return Err(CostError::InvalidInput(
                "iterations must be positive".into(),
            ));
        }
        if self.beam_width == Some(0) {
            return Err(CostError::InvalidInput(
                "beam width must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Evaluates the operation-count formula of `method`.
pub fn predicted_ops(method: CostMethod, inputs: &CostInputs) -> Result<f64, CostError> {
    inputs.validate()?;
    let n = inputs.n as f64;
    let d = inputs.d as f64;
    let eps = inputs.epsilon;
    let log_n = n.log2();

    let ops = match method {
        CostMethod::M1 => n + eps.powf(-(d - 2.0)),
        CostMethod::M2 => n * eps.powf((1.0 - d) / 2.0) * log_n,
        CostMethod::M3 => {
            let alpha = 2f64.powf(-(d + 1.0));
            n.powf(2.0 - alpha) * log_n.powf(1.0 - alpha)
        }
        CostMethod::M4 => n * inputs.resolved_m() as f64,
        CostMethod::M5 => d * n * log_n + n * n,
        CostMethod::M6 => n + eps.powf(-(d - 1.5)),
        CostMethod::M7 => n + eps.powf(-(3.0 * (d - 1.0) / 2.0)),
        CostMethod::M8 => (n + eps.powf(-(3.0 * (d - 1.0) / 2.0))) * (1.0 / eps).log2(),
        CostMethod::BF => d * n * (n - 1.0) / 2.0,
        CostMethod::A1 => n * d + 2.0 * n * log_n + d * log_n * log_n,
        CostMethod::Greedy => {
            let it = inputs.iterations.ok_or_else(|| {
                CostError::InvalidInput("GREEDY needs an observed iteration count".into())
            })?;
            it as f64 * n * d
        }
    };
    Ok(ops)
}
