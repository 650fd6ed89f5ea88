use thiserror::Error;

use crate::construct::ResumeToken;
use crate::design::Infeasibility;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("capacity exceeded: {what} needs {size}, cap is {cap}")]
    Capacity { what: &'static str, size: String, cap: u64 },

    #[error("group is not transitive: {} orbits", orbits.len())]
    Intransitive { orbits: Vec<Vec<usize>> },

    #[error("integrity check failed: {0}")]
    Integrity(String),

    #[error("not an automorphism group: {0}")]
    NotAutomorphism(String),

    #[error("infeasible parameters: {0}")]
    Infeasible(Infeasibility),

    #[error("refuted: {0}")]
    Refutation(String),

    #[error("base-block search exceeded its cap after level {}", token.level)]
    SearchCap { token: ResumeToken },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
