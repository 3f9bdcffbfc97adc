//! Recognition and certificate construction for circular-arc catch digraphs.
//!
//! A digraph is a circular-arc catch digraph when every vertex `v` can be given
//! a closed arc `I_v` of a circle and a point `p_v ∈ I_v` such that `u -> v`
//! exactly when `p_v ∈ I_u`. The crate decides membership in this class and in
//! its proper, oriented-proper and tournament subclasses, emitting either a
//! checkable representation or a failure witness.
//!
//! The [`harness`] module holds the exhaustive small-instance oracles used to
//! validate each recognizer.

pub mod circular_ones;
pub mod digraph;
pub mod error;
pub mod harness;
pub mod json;
pub mod matrix;
pub mod oriented;
pub mod proper;
pub mod recognition;
pub mod representation;

pub use circular_ones::{Permutation, RowStretch};
pub use digraph::Digraph;
pub use error::{Error, Result};
pub use matrix::BinaryMatrix;
pub use representation::{CatchRepresentation, CirclePos, CircularArc, Rational};
pub use recognition::{Certificate, Verdict, Witness};
