//! Exact computations with graded modules over polynomial rings in
//! positive characteristic.

pub mod algebra;
pub mod error;
pub mod groebner;

pub use error::{Error, Result};
pub mod linalg;
pub mod homological;
pub mod module;
pub mod invariants;
pub mod corpus;
