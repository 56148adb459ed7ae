use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Outcome of one verification.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub passed: bool,
    /// Basis indices (or coordinates) of the first failure.
    pub witness: Option<Vec<usize>>,
    pub note: String,
    pub values: BTreeMap<String, Value>,
}

impl Report {
    pub fn pass(check: &str) -> Self {
        Report { check: check.to_string(), passed: true, witness: None, note: String::new(), values: BTreeMap::new() }
    }

    pub fn fail(check: &str, witness: Vec<usize>, note: impl Into<String>) -> Self {
        Report {
            check: check.to_string(),
            passed: false,
            witness: Some(witness),
            note: note.into(),
            values: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.values.insert(key.to_string(), v.into());
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    /// First failing report in order, otherwise a pass carrying every value.
    pub fn all(check: &str, parts: Vec<Report>) -> Report {
        let mut out = Report::pass(check);
        for p in parts {
            for (k, v) in &p.values {
                out.values.insert(format!("{}.{}", p.check, k), v.clone());
            }
            if out.passed && !p.passed {
                out.passed = false;
                out.witness = p.witness.clone();
                out.note = format!("{}: {}", p.check, p.note);
            }
        }
        out
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", if self.passed { "PASS" } else { "FAIL" }, self.check)?;
        if let Some(w) = &self.witness {
            write!(f, " witness={:?}", w)?;
        }
        if !self.note.is_empty() {
            write!(f, " ({})", self.note)?;
        }
        for (k, v) in &self.values {
            write!(f, "\n    {} = {}", k, v)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

/// One claim inside a scenario, with the value it was compared against.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    pub outcome: Outcome,
    pub expected: Value,
    pub computed: Value,
    pub witness: Option<Vec<usize>>,
    pub note: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScenarioReport {
    pub scenario: String,
    pub seed: u64,
    pub full: bool,
    pub claims: Vec<Claim>,
    pub wall_ms: u128,
}

impl ScenarioReport {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.outcome != Outcome::Fail)
    }
}

impl fmt::Display for ScenarioReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "scenario {} (seed {}, full {})", self.scenario, self.seed, self.full)?;
        for c in &self.claims {
            let tag = match c.outcome {
                Outcome::Pass => "PASS",
                Outcome::Fail => "FAIL",
                Outcome::Skipped => "SKIP",
            };
            write!(f, "  {} {}: computed {}", tag, c.id, c.computed)?;
            if c.outcome == Outcome::Fail {
                write!(f, ", expected {}", c.expected)?;
            }
            if let Some(w) = &c.witness {
                write!(f, ", witness {:?}", w)?;
            }
            if !c.note.is_empty() {
                write!(f, " [{}]", c.note)?;
            }
            writeln!(f)?;
        }
        write!(f, "{} in {} ms", if self.passed() { "passed" } else { "FAILED" }, self.wall_ms)
    }
}
