//! Exact computations for finite-dimensional representations of the modular
//! group `PSL(2, Z) = <X, Y | X^3 = Y^2 = 1>`: dimension vectors, explicit
//! families, extension counts, iterated extensions and the generating
//! functions that tie them together.
//!
//! All arithmetic is exact, over `Q(w)` with `w` a primitive cube root of
//! unity.

pub mod arith;
pub mod dimvec;
pub mod error;
pub mod ext_deform;
pub mod mie;
pub mod rep;
pub mod series;

pub use arith::{Cyclotomic, Matrix, Rational, RowSpace};
pub use dimvec::DimVector;
pub use error::{Error, Result};
pub use ext_deform::Decomposition;
pub use mie::{FreeEntries, IndSummary, SignPattern};
pub use rep::{Letter, Representation, Sign};
pub use series::Series;
