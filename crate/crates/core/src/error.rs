use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("arity mismatch: expected {expected} arguments, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("non-finite entry at index {0}")]
    NonFinite(usize),

    #[error("negative entry {value} at index {index}; a positive vector was required")]
    Negative { index: usize, value: f64 },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("{parts:?} is not a complete partition of {target}")]
    IncompletePartition { parts: Vec<u64>, target: u64 },

    #[error("enumeration bound exceeded: s = {s} > {bound}")]
    BoundExceeded { s: u64, bound: u64 },

    #[error("wrong infimum kind: expected {expected}, found {found}")]
    WrongKind { expected: &'static str, found: &'static str },

    #[error("polarization degree {0} exceeds the supported maximum of 8")]
    DegreeTooLarge(usize),

    #[error("homogeneity spot-check failed: P({lambda}·f) deviates from {lambda}^s·P(f) by {deviation:e}")]
    NotHomogeneous { lambda: f64, deviation: f64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}
