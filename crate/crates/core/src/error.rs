//! Error type shared by every module of the crate.
//!
//! The split between "error" and "failed check" matters here: checks that a
//! law or an axiom holds are *results* (see [`crate::report`]) — they report
//! pass/fail with a witness.  `CoreError` is reserved for situations where a
//! computation cannot proceed at all: malformed input, dimension mismatches,
//! an operator that is not diagonalizable where the theory demands it, or a
//! probe pair that contradicts itself.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    /// Malformed scalar/string input.
    #[error("parse error: {0}")]
    Parse(String),

    /// A JSON document does not match the expected schema.
    #[error("schema error: {0}")]
    Schema(String),

    /// Incompatible dimensions between objects that should agree.
    #[error("dimension mismatch: {0}")]
    Dim(String),

    /// A matrix that must be invertible is not.
    #[error("singular matrix: {0}")]
    Singular(String),

    /// An operator expected to act semisimply with integer eigenvalues does
    /// not (non-integer eigenvalue, defective action, or a non-invariant
    /// subspace during refinement).
    #[error("operator not diagonalizable with integer eigenvalues: {0}")]
    NonDiagonalizable(String),

    /// The input Lie algebra violates a structural assumption of the
    /// decomposition (weight outside Â_n, exhaustion failure, bad generator
    /// relations, ...).
    #[error("structure violation: {0}")]
    Structure(String),

    /// Two independent probe brackets disagree about the same product
    /// tensor entry.
    #[error("probe inconsistency: {0}")]
    ProbeInconsistency(String),

    /// Rank outside the supported window.
    #[error("unsupported rank: {0}")]
    Rank(String),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
