//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed graph file.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A caller broke a documented precondition.
    #[error("contract violation: {0}")]
    ContractViolation(String),

    /// The failure set is larger than the preprocessed budget.
    #[error("failure set of size {given} exceeds budget d* = {budget}")]
    BudgetExceeded { given: usize, budget: usize },

    /// Connectivity queries are only defined for surviving vertices.
    #[error("query on failed vertex {0}")]
    QueryOnFailedVertex(u32),

    /// Corrupt or incompatible serialized index.
    #[error("index format error: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub fn contract(msg: impl Into<String>) -> Self {
        Error::ContractViolation(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
