use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const EXIT_PASS: u8 = 0;
pub const EXIT_REFUTED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub detail: String,
    pub name: String,
    pub pass: bool,
}

impl Verdict {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Verdict {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

/// What a command produced before it is wrapped into a [`RunReport`].
pub struct Outcome {
    pub verdicts: Vec<Verdict>,
    pub artifacts: Vec<String>,
    pub payload: Value,
    pub text: String,
}

/// Fields are declared in key order, matching the sorted maps inside
/// `payload`, so any JSON tool re-renders a report unchanged.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub artifacts: Vec<String>,
    pub command: Vec<String>,
    pub exit_code: u8,
    pub payload: Value,
    pub verdicts: Vec<Verdict>,
    pub wall_time_us: u64,
}

impl RunReport {
    pub fn from_outcome(command: Vec<String>, wall_time_us: u64, outcome: &Outcome) -> Self {
        let exit_code = if outcome.verdicts.iter().all(|v| v.pass) {
            EXIT_PASS
        } else {
            EXIT_REFUTED
        };
        RunReport {
            command,
            wall_time_us,
            verdicts: outcome.verdicts.clone(),
            artifacts: outcome.artifacts.clone(),
            exit_code,
            payload: outcome.payload.clone(),
        }
    }

    pub fn from_error(command: Vec<String>, wall_time_us: u64, exit_code: u8, message: String) -> Self {
        RunReport {
            command,
            wall_time_us,
            verdicts: vec![Verdict::new("error", false, message)],
            artifacts: Vec::new(),
            exit_code,
            payload: Value::Null,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
