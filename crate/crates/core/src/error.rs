use thiserror::Error;

/// Errors produced by `wreathchar-core`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the order k of the root of unity must be positive")]
    ZeroOrder,

    #[error("mismatched root-of-unity orders: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("value is not an algebraic integer: {0}")]
    NotIntegral(String),

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("expected {expected} constituents, found {found}")]
    ConstituentCount { expected: usize, found: usize },

    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("no part at color {color}, index {index}")]
    InvalidPartChoice { color: usize, index: usize },

    #[error("constituent {0} is empty")]
    EmptyConstituent(usize),

    #[error("bead count {beads} must be a multiple of {k} and at least the length {len}")]
    InvalidBeadCount { beads: usize, k: usize, len: usize },

    #[error("{0} is not a {1}-core")]
    NotACore(String, usize),

    #[error("{count} colored partitions exceed the limit of {limit}")]
    ResourceLimit { count: usize, limit: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cache file {path}: {message}")]
    Cache { path: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
