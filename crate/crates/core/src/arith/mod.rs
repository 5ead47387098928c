//! Exact scalar and matrix arithmetic over Q and Q(w).

mod cyclotomic;
mod matrix;

pub use cyclotomic::Cyclotomic;
pub use matrix::{mat_inverse, mat_mul, mat_rank, Matrix, RowSpace};

/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

pub fn cyc_add(x: &Cyclotomic, y: &Cyclotomic) -> Cyclotomic {
    x + y
}

pub fn cyc_mul(x: &Cyclotomic, y: &Cyclotomic) -> Cyclotomic {
    x * y
}

pub fn cyc_inv(x: &Cyclotomic) -> crate::Result<Cyclotomic> {
    x.inv()
}
