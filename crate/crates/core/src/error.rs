use thiserror::Error;

use crate::witness::Witness;

/// Errors raised while building or transforming finite structures.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("entry {value} at position {position} is out of range for carrier of size {n}")]
    IndexOutOfRange {
        value: usize,
        position: usize,
        n: usize,
    },

    #[error("expected {expected} entries, found {found}")]
    ShapeMismatch { expected: usize, found: usize },

    #[error("carrier sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("carrier must be non-empty")]
    EmptyCarrier,

    #[error("order {order} exceeds the configured bound {bound}")]
    BoundExceeded { order: usize, bound: usize },

    #[error("invalid specification: {0}")]
    InvalidSpec(String),

    #[error("structure is not a square skew left brace: {0}")]
    NotSquare(Witness),

    #[error("structure is not a dual weak left star-brace: {0}")]
    NotDual(Witness),

    #[error("element {0} is not a right distributor")]
    NotDistributor(usize),

    #[error("decomposition failed: {0}")]
    Decomposition(Witness),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
