//! Finite groupoids, weak 2-group presentations, weak actions,
//! prequotients, strict bundle theory, and Morita equivalence — all in the
//! discrete model, where every manifold is a finite set (a discrete
//! groupoid), every submersion condition is vacuous, and every coherence
//! diagram is decidable by finite enumeration.
//!
//! Conventions used throughout:
//!
//! * Composition of arrows and of functors is written `comp(g, h) = g∘h`,
//!   "apply `h` first".  The multiplication of a groupoid object is a
//!   functor `m` on composable pairs `(g, h)` with `s(g) = t(h)`, and
//!   `m(g, h)` is written `g·h`; it agrees with categorical composition
//!   when the groupoid object is an honest groupoid.
//! * All values are immutable after construction and every operation is a
//!   pure function.
//! * Checks return [`core::Verdict`] values whose witnesses name the
//!   violated axiom or diagram and the offending identifiers, and can be
//!   replayed.  Structural problems are [`error::Error`]s instead.

pub mod action;
pub mod bundles;
pub mod core;
pub mod error;
pub mod morita;
pub mod prequotient;
pub mod weakgroupoid;

pub use error::Error;
