use thiserror::Error;

use crate::geom::PointId;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument outside the domain of the operation (e.g. `k = 0`).
    #[error("domain error: {0}")]
    Domain(String),

    /// Malformed text input. `line` is 1-based.
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },

    /// A point set violating the per-axis distinctness or ordering invariants.
    #[error("invalid point set: {0}")]
    InvalidPointSet(String),

    #[error("unknown point id {0}")]
    UnknownPoint(PointId),

    /// A coloring that does not cover every point of the set it is checked against.
    #[error("coloring is not total: point {0} has no color")]
    MissingColor(PointId),

    /// A backtracking search ran out of nodes before deciding.
    #[error("search budget of {budget} nodes exhausted")]
    BudgetExhausted { budget: u64 },

    /// A guarantee that must hold did not: a bug, or a counterexample to the theory.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
