use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Named exact values describing one candidate, e.g. `{"c": "11", "v": "55"}`.
pub type Params = BTreeMap<String, String>;

pub(crate) fn params<const N: usize>(pairs: [(&str, String); N]) -> Params {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Survivor {
    pub params: Params,
    /// Every condition checked, in order, with its outcome.
    pub trail: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eliminated {
    pub params: Params,
    /// The first condition the candidate failed.
    pub failed: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Check {
            name: name.into(),
            pass: expected == actual,
            expected,
            actual,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SieveReport {
    pub sieve: String,
    pub ranges: Params,
    pub survivors: Vec<Survivor>,
    pub eliminated: Vec<Eliminated>,
    pub eliminated_count: u64,
    pub checks: Vec<Check>,
}

impl SieveReport {
    pub(crate) fn new(sieve: &str, ranges: Params) -> Self {
        SieveReport {
            sieve: sieve.to_string(),
            ranges,
            survivors: Vec::new(),
            eliminated: Vec::new(),
            eliminated_count: 0,
            checks: Vec::new(),
        }
    }

    pub(crate) fn survive(&mut self, params: Params, trail: Vec<String>) {
        self.survivors.push(Survivor { params, trail });
    }

    pub(crate) fn eliminate(&mut self, params: Params, failed: impl Into<String>) {
        self.eliminated.push(Eliminated {
            params,
            failed: failed.into(),
        });
        self.eliminated_count += 1;
    }

    pub(crate) fn check(&mut self, name: &str, expected: impl ToString, actual: impl ToString) {
        self.checks.push(Check::new(name, expected, actual));
    }

    /// All checks pass.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn survivor_values(&self, key: &str) -> Vec<String> {
        self.survivors
            .iter()
            .filter_map(|s| s.params.get(key).cloned())
            .collect()
    }
}

fn fmt_params(p: &Params) -> String {
    let parts: Vec<String> = p.iter().map(|(k, v)| format!("{k}={v}")).collect();
    parts.join(" ")
}

impl fmt::Display for SieveReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "sieve {} ({})", self.sieve, fmt_params(&self.ranges))?;
        writeln!(f, "survivors: {}", self.survivors.len())?;
        for s in &self.survivors {
            writeln!(f, "  {}", fmt_params(&s.params))?;
            for t in &s.trail {
                writeln!(f, "    - {t}")?;
            }
        }
        writeln!(f, "eliminated: {}", self.eliminated_count)?;
        let mut reasons: BTreeMap<String, u64> = BTreeMap::new();
        for e in &self.eliminated {
            let key = e.failed.split(':').next().unwrap_or(&e.failed).to_string();
            *reasons.entry(key).or_insert(0) += 1;
        }
        for (reason, n) in reasons {
            writeln!(f, "  {n} × {reason}")?;
        }
        for c in &self.checks {
            writeln!(
                f,
                "[{}] {}: expected {}, got {}",
                if c.pass { "ok" } else { "FAIL" },
                c.name,
                c.expected,
                c.actual
            )?;
        }
        Ok(())
    }
}
