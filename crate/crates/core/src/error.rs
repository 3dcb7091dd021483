use thiserror::Error;

use crate::polytope::Containment;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported type {0}")]
    UnsupportedType(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("root systems do not match: {0} vs {1}")]
    RootSystemMismatch(String, String),
    #[error("{0} is not simply laced; tropical Plücker relations are only checked on simply-laced covers, use folding")]
    UseFolding(String),
    #[error("datum is not normalized: M at w0·ϖ_{index} is {value}, expected 0")]
    NotNormalized { index: usize, value: i64 },
    #[error("not an MV datum: Lusztig coordinate {position} is {value}")]
    NotMv { position: usize, value: i64 },
    #[error("word is not a reduced word of w0")]
    NotLongestWord,
    #[error("no braid move at position {0}")]
    InvalidMove(usize),
    #[error("datum violates tropical Plücker: conflicting values {first} and {second} for one chamber weight")]
    InconsistentAssignment { first: i64, second: i64 },
    #[error("braid-move propagation did not reach every chamber weight")]
    CoverageIncomplete,
    #[error("crystal cross-check failed: {0}")]
    CrystalAxiom(String),
    #[error("AM box search: feasible data have no greatest element ({feasible} feasible points)")]
    AmbiguousMaximum { feasible: usize },
    #[error("AM box search: lower corner is not feasible ({0})")]
    EmptyBox(String),
    #[error("AM box search: box with {0} points exceeds the search budget")]
    BoxTooLarge(u128),
    #[error("unexpected containment {0:?}")]
    UnexpectedContainment(Containment),
    #[error("σ-invariance violated: {0}")]
    NotSigmaInvariant(String),
    #[error("invalid diagram automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("module error: {0}")]
    Module(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
