//! Type sequences and the invariants `a(I)`, `b(I)`, `d(I)` of ideals in
//! numerical semigroup rings `k[[t^S]]`, with exhaustive verification of the
//! identities and bounds relating them.
//!
//! Lengths of modules over the ring are cardinalities of value-set
//! differences, so every quantity here is exact integer arithmetic on
//! finite windows.

mod bits;
pub mod census;
pub mod check;
pub mod cli;
pub mod error;
pub mod ideal;
pub mod invariants;
pub mod semigroup;

pub use error::{Error, Result};
pub use ideal::RelativeIdeal;
pub use semigroup::NumericalSemigroup;
