//! Exact-arithmetic toolkit for Â_n-graded Lie algebras over sl(n+1).
//!
//! Everything here runs over the rationals with arbitrary-precision
//! arithmetic: matrix models of the small sl(n+1)-modules, tensor-product
//! decomposition by highest-weight counting, the coordinate-algebra layer
//! that labels the multiplicity spaces, assembly of the full graded Lie
//! algebra from coordinate data, and the reverse direction that extracts
//! coordinates from a concrete Lie algebra given a Chevalley embedding of
//! sl(n+1).
//!
//! The crate is split in two directions:
//!
//! * construction: [`coordalg`] -> [`liebuilder`] builds a Lie algebra
//!   from coordinate data and checks the axioms (anticommutativity,
//!   Jacobi, grading);
//! * decomposition: [`extractor`] splits a Lie algebra into isotypic
//!   pieces and reads the coordinate data back off bracket probes.
//!
//! [`fixtures`] provides concrete classical-algebra instances used to
//! exercise the round trip.

pub mod bracket;
pub mod coordalg;
pub mod error;
pub mod extractor;
pub mod fixtures;
pub mod homs;
pub mod lawcheck;
pub mod liebuilder;
pub mod linalg;
pub mod par;
pub mod report;
pub mod scalars;
pub mod slmodules;
pub mod tensor;

pub use error::CoreError;
pub use scalars::Rat;

/// Largest rank `n` the tooling accepts. Dimensions grow like `n^4`
/// in the worst sweeps, and everything is exact arithmetic, so keep a
/// conservative ceiling rather than letting a typo'd rank spin forever.
pub const MAX_RANK: usize = 8;

/// Smallest rank for which all eight module labels are distinct and the
/// generic decomposition tables apply without identifications.
pub const MIN_RANK: usize = 2;

/// Validate a rank argument against the supported window.
pub fn check_rank(n: usize) -> Result<(), CoreError> {
    if n < MIN_RANK || n > MAX_RANK {
        return Err(CoreError::Rank(format!(
            "rank n={n} outside supported range {MIN_RANK}..={MAX_RANK}"
        )));
    }
    Ok(())
}
