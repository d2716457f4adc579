use thiserror::Error;

/// Errors surfaced by the library.
///
/// `InternalInconsistency` is reserved for states that the underlying theory
/// rules out; reaching it means a bug, and the CLI maps it to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge mismatch: {0}")]
    EdgeMismatch(String),

    #[error("vertex {vertex} is not a source: arrow {tail}>{head} ends at it")]
    NotASource {
        vertex: usize,
        tail: usize,
        head: usize,
    },

    #[error("object ({column},{vertex}) lies outside the window: 0 <= column <= {bound} required")]
    OutOfWindow {
        column: i64,
        vertex: usize,
        bound: i64,
    },

    #[error("mesh knitting produced a negative entry at ({column},{vertex})")]
    NegativeKnit { column: i64, vertex: usize },

    #[error("overlapping Hom-dimension cases disagree at {witness}: {lhs} vs {rhs}")]
    CaseMismatch { witness: String, lhs: i64, rhs: i64 },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("no tabulated endomorphism dimension for family {family} of rank {rank}")]
    WrongFamily { family: char, rank: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
