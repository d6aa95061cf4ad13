//! Exact-arithmetic workbench for finite quadratic Jordan algebras.
//!
//! The crate constructs quadratic algebras over prime fields, verifies the
//! weak and strict Jordan axioms together with a catalog of derived operator
//! identities, computes ε-derivation spaces as exact kernels, builds the
//! Moufang set attached to a division algebra as an explicit permutation
//! structure, and enumerates small algebras exhaustively in search of
//! weak-but-not-strict examples.
//!
//! All arithmetic is exact; every check is an exhaustive quantification over
//! a finite structure, never a sample. Results are deterministic and
//! byte-reproducible.

pub mod constructions;
pub mod deriv;
pub mod gf;
pub mod identities;
pub mod linalg;
pub mod moufang;
pub mod qjcore;
pub mod search;

use thiserror::Error;

/// Errors shared across the crate.
///
/// Mathematical verdicts ("not invertible", "identity fails") are values,
/// not errors; this type covers contract violations and unusable input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("element count {size} exceeds the exhaustive-check bound {bound}")]
    BoundExceeded { size: u128, bound: u128 },
    #[error("element is not invertible")]
    NotInvertible,
    #[error("not a division algebra")]
    NotDivision,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
