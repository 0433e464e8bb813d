use serde::{Deserialize, Serialize};

use crate::numerics::ExactNumber;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PopulationSource {
    /// Every labeled graph on `n` vertices.
    Enumeration,
    /// Whatever the graph6 stream contained; no completeness claim.
    Stream,
    /// A fixed list of named graphs (closed-form checks).
    Constructed,
}

/// Best value among graphs that do not attain the bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunnerUp {
    pub value: ExactNumber,
    pub witness: String,
}

/// Outcome of one theorem check at one order `n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub theorem_id: String,
    pub n: usize,
    pub population: u64,
    pub population_source: PopulationSource,
    /// graph6 strings, sorted.
    pub violations: Vec<String>,
    /// graph6 strings in population order.
    pub equality_witnesses: Vec<String>,
    pub extremal_value: ExactNumber,
    pub elapsed_seconds: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runner_up: Option<RunnerUp>,
}

impl VerificationRecord {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Copy with `elapsed_seconds` zeroed, for comparing runs.
    pub fn without_timing(&self) -> Self {
        Self {
            elapsed_seconds: 0.0,
            ..self.clone()
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}
