//! Named verification suites with machine-readable reports.
//!
//! A report is a pure function of the suite name and seed; wall-clock time is
//! kept in a separate optional field so reports can be compared byte for
//! byte.

mod suites;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{GeomError, Result};
use crate::exec::Exec;

pub use suites::{
    COMBO_INSTANCES, EVENGON_INSTANCES, FLATTEN_INSTANCES, HULL_INSTANCES, JENSEN_INSTANCES, REG_BEST_INSTANCES,
};

/// Suite names accepted by [`run`], in the order `all` runs them.
pub const SUITES: [&str; 10] = [
    "heptagon",
    "monotonicity",
    "evengon",
    "tileparams",
    "flattening",
    "hull",
    "combinatorics",
    "klein-quartic",
    "euclid-hex",
    "reg-is-best",
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub description: String,
    pub passed: bool,
    pub measured: Map<String, Value>,
    pub tolerance: Option<f64>,
}

impl Check {
    pub fn new(id: &str, description: &str, tolerance: Option<f64>) -> Self {
        Check {
            id: id.into(),
            description: description.into(),
            passed: false,
            measured: Map::new(),
            tolerance,
        }
    }

    pub fn measure(mut self, key: &str, value: impl Serialize) -> Self {
        self.measured
            .insert(key.into(), serde_json::to_value(value).unwrap_or(Value::Null));
        self
    }

    pub fn pass(mut self, ok: bool) -> Self {
        self.passed = ok;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(suite: &str, checks: Vec<Check>) -> Self {
        SuiteReport {
            suite: suite.into(),
            passed: checks.iter().all(|c| c.passed),
            checks,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub seed: u64,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_seconds: Option<f64>,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// One suite. Unknown names are a domain error.
pub fn run_suite(name: &str, seed: u64, exec: Exec) -> Result<SuiteReport> {
    let checks = match name {
        "heptagon" => suites::heptagon(),
        "monotonicity" => suites::monotonicity(),
        "evengon" => suites::evengon(seed, exec),
        "tileparams" => suites::tileparams(exec),
        "flattening" => suites::flattening(seed, exec),
        "hull" => suites::hull(seed, exec),
        "combinatorics" => suites::combinatorics(seed, exec),
        "klein-quartic" => suites::klein_quartic(),
        "euclid-hex" => suites::euclid_hex(seed),
        "reg-is-best" => suites::reg_is_best(seed, exec),
        _ => {
            return Err(GeomError::Domain(format!(
                "unknown suite '{name}' (expected one of {} or all)",
                SUITES.join(", ")
            )))
        }
    };
    Ok(SuiteReport::new(name, checks))
}

/// A suite by name, or every suite for `"all"`.
pub fn run(name: &str, seed: u64, exec: Exec) -> Result<VerificationReport> {
    let names: Vec<&str> = if name == "all" { SUITES.to_vec() } else { vec![name] };
    let suites = names
        .iter()
        .map(|n| run_suite(n, seed, exec))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport {
        seed,
        passed: suites.iter().all(|s| s.passed),
        suites,
        runtime_seconds: None,
    })
}
