use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid privacy budget: {0}")]
    InvalidBudget(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("exponential mechanism needs at least one candidate")]
    EmptyCandidates,

    #[error("modularity is undefined for a graph with zero total weight")]
    UndefinedModularity,

    #[error("{cells} adjacency cells exceed the configured limit of {cap}")]
    TooLarge { cells: u128, cap: u128 },

    #[error("node sets differ: {0}")]
    NodeSetMismatch(String),

    #[error("privacy budget violated: {0}")]
    BudgetViolation(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
