use thiserror::Error;

use crate::series::VarRef;

/// Errors raised by the series algebra, the brute-force oracle and the
/// enumeration pipelines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable index must be >= 1 (got {family}{index}); scalars only take index 1")]
    InvalidVariable { family: &'static str, index: u32 },

    #[error("substituting {var} lowers its grade; the truncated input cannot be expanded soundly")]
    TruncationUnsound { var: VarRef },

    #[error("series is not divisible by {divisor}: term {term} lacks the factor")]
    InexactDivision { divisor: String, term: String },

    #[error("coefficient of {term} is {value}, expected a nonnegative integer")]
    NotACount { term: String, value: String },

    #[error("series contains {var}, which this operation cannot represent")]
    UnexpectedVariable { var: VarRef },

    #[error("path matching polynomial U_0 has no polynomial form (it is 1/z)")]
    PathOfLengthZero,

    #[error("graph has {n} vertices; this operation is limited to {limit}")]
    GraphTooLarge { n: usize, limit: usize },

    #[error("{0}")]
    InvalidGraph(String),

    #[error("permutation is not an automorphism of the graph")]
    NotAnAutomorphism,

    #[error("network plus the pole edge is not 2-connected")]
    NotBiconnected,

    #[error("representatives {0} and {1} are isomorphic")]
    DuplicateRepresentative(usize, usize),

    #[error("requested n = {requested} exceeds {limit}: {reason}")]
    OutOfRange {
        requested: u32,
        limit: u32,
        reason: String,
    },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
