//! Error types shared across the library.
//!
//! Structural problems (malformed tables, mismatched domains) are reported
//! through [`Error`] and are deliberately distinct from mathematical check
//! failures, which are reported through [`crate::core::Verdict`] values.

use crate::core::Witness;

/// A structural error: the input data is malformed or incompatible, as
/// opposed to well-formed data that fails a mathematical axiom.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An identifier in a table points outside the declared range.
    #[error("identifier out of range: {table}[{index}] = {value}, limit {limit}")]
    OutOfRange {
        table: &'static str,
        index: usize,
        value: usize,
        limit: usize,
    },

    /// A table does not have the declared length.
    #[error("table {table} has length {actual}, expected {expected}")]
    BadLength {
        table: &'static str,
        expected: usize,
        actual: usize,
    },

    /// Two pieces of data that must share a groupoid do not.
    #[error("mismatched {what}")]
    Mismatch { what: &'static str },

    /// A strict action whose axioms fail; carries a replayable witness.
    #[error("set-level action axiom failed: {0:?}")]
    InvalidAction(Witness),

    /// A search for an arrow forced by a universal property found nothing.
    #[error("derivation failed: no arrow satisfies the defining diagram for {what}")]
    DerivationFailed { what: &'static str },

    /// A search for an arrow that is provably unique found more than one
    /// candidate.  This is always reported, never silently resolved.
    #[error("derivation ambiguous: several arrows satisfy the defining diagram for {what}")]
    AmbiguousDerivation { what: &'static str },

    /// Two independently computed verdicts that a theorem forces to agree
    /// disagreed.  This indicates a bug in the library, not in the input.
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}
