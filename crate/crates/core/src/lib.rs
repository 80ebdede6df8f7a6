//! Pythagorean triples, solutions of `x² + 2y² = z²`, Pythagorean boxes and
//! triangle pairs sharing a side, with bounded exhaustive searches that
//! check the related non-existence statements in exact integer arithmetic.

pub mod arith;
pub mod boxes;
pub mod cli;
mod error;
pub mod output;
pub mod partition;
pub mod shared_side;
pub mod triples;
pub mod two_square;
pub mod verifier;

pub use boxes::{BoxParams, FaceDiagonalParams, PythagoreanBox};
pub use error::{Error, Result, Violation};
pub use shared_side::{FamilyParams, SharedLeg, TrianglePair};
pub use triples::{Decomposition, Triple, TripleParams};
pub use two_square::{TwoTwoParams, TwoTwoSolution};
pub use verifier::{Claim, SearchReport};
