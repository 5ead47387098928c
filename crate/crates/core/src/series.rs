//! Truncated formal power series over Q and the generating-function
//! identities built on them.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::arith::Rational;
use crate::dimvec::{max_simp_dim, DimVector};
use crate::error::{Error, Result};

/// Default truncation order for dimension sequences.
pub const DEFAULT_DIM_ORDER: usize = 50;
/// Default truncation order for the modular-forms identity.
pub const DEFAULT_IDENTITY_ORDER: usize = 100;

/// A power series known modulo `x^(order + 1)`.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rational>,
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

impl Series {
    /// Coefficients `c_0, c_1, ...`; truncated or zero-padded to `order + 1` terms.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Series { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Series::new(coeffs.iter().map(|&c| rat(c)).collect(), order)
    }

    pub fn one(order: usize) -> Self {
        Series::from_ints(&[1], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient `k` as an integer, or `None` if it is not integral.
    pub fn int_coeff(&self, k: usize) -> Option<i64> {
        let c = self.coeff(k);
        if c.is_integer() {
            i64::try_from(c.to_integer()).ok()
        } else {
            None
        }
    }

    pub fn add(&self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series::new(
            (0..=order)
                .map(|k| &self.coeffs[k] + &rhs.coeffs[k])
                .collect(),
            order,
        )
    }

    pub fn sub(&self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series::new(
            (0..=order)
                .map(|k| &self.coeffs[k] - &rhs.coeffs[k])
                .collect(),
            order,
        )
    }

    pub fn mul(&self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Series { coeffs: out }
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn reciprocal(&self) -> Result<Series> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::pre(
                "series with zero constant term has no reciprocal",
            ));
        }
        let inv0 = c0.recip();
        let order = self.order();
        let mut out = vec![Rational::zero(); order + 1];
        out[0] = inv0.clone();
        for k in 1..=order {
            let mut s = Rational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    s += &self.coeffs[j] * &out[k - j];
                }
            }
            out[k] = -s * &inv0;
        }
        Ok(Series { coeffs: out })
    }

    pub fn div(&self, rhs: &Series) -> Result<Series> {
        Ok(self.mul(&rhs.reciprocal()?))
    }
}

/// Serialized as the list of coefficients in string form.
impl Serialize for Series {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}] + O(x^{})", parts.join(", "), self.order() + 1)
    }
}

/// Product of integer polynomials given as coefficient lists.
pub fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `1 - x^k` as a coefficient list.
pub fn one_minus_x_pow(k: usize) -> Vec<i64> {
    let mut p = vec![0i64; k + 1];
    p[0] += 1;
    p[k] -= 1;
    p
}

/// Taylor expansion of `numerator / denominator` through `x^order`.
pub fn expand_rational(numerator: &[i64], denominator: &[i64], order: usize) -> Result<Series> {
    if denominator.first().copied().unwrap_or(0) == 0 {
        return Err(Error::pre("denominator must have a nonzero constant term"));
    }
    Series::from_ints(numerator, order).div(&Series::from_ints(denominator, order))
}

/// `(t^2 + 2t^6 - 2t^7 + t^8) / ((1 - t)^2 (1 - t^6))`.
pub fn maxdim_gf(order: usize) -> Result<Series> {
    let num = [0, 0, 1, 0, 0, 0, 2, -2, 1];
    let den = poly_mul(
        &poly_mul(&one_minus_x_pow(1), &one_minus_x_pow(1)),
        &one_minus_x_pow(6),
    );
    expand_rational(&num, &den, order)
}

/// True iff the coefficient of `t^n` in [`maxdim_gf`] equals
/// [`max_simp_dim`]`(n)` for `1 <= n <= order`.
pub fn maxdim_gf_check(order: usize) -> Result<bool> {
    if order == 0 {
        return Err(Error::pre("order must be >= 1"));
    }
    let s = maxdim_gf(order)?;
    for n in 1..=order {
        if s.coeff(n) != rat(max_simp_dim(n as u64)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `n - 1 - floor((n-1)/3) - floor((n-1)/2)`.
pub fn codim_sequence(n: u64) -> Result<i64> {
    if n == 0 {
        return Err(Error::pre("n must be >= 1"));
    }
    let m = (n - 1) as i64;
    Ok(m - m / 3 - m / 2)
}

/// `1 / ((1 - x^2)(1 - x^3))`, whose coefficients count modular forms of
/// weight `2n`.
pub fn modular_forms_gf(order: usize) -> Result<Series> {
    expand_rational(
        &[1],
        &poly_mul(&one_minus_x_pow(2), &one_minus_x_pow(3)),
        order,
    )
}

/// The codimension generating function assembled from its three floor-sum
/// pieces: `x^2/(1-x)^2 - x^4/((1-x)(1-x^3)) - x^3/((1-x)(1-x^2))`.
pub fn codim_gf_by_parts(order: usize) -> Result<Series> {
    let one_x = one_minus_x_pow(1);
    let linear = expand_rational(&[0, 0, 1], &poly_mul(&one_x, &one_x), order)?;
    let thirds = expand_rational(
        &[0, 0, 0, 0, 1],
        &poly_mul(&one_x, &one_minus_x_pow(3)),
        order,
    )?;
    let halves = expand_rational(&[0, 0, 0, 1], &poly_mul(&one_x, &one_minus_x_pow(2)), order)?;
    Ok(linear.sub(&thirds).sub(&halves))
}

/// True iff `sum codim_sequence(n) x^n` equals `1/((1-x^2)(1-x^3)) - 1`
/// through `x^order`. The by-parts expansion must agree as well.
pub fn modular_forms_identity_check(order: usize) -> Result<bool> {
    if order == 0 {
        return Err(Error::pre("order must be >= 1"));
    }
    let target = modular_forms_gf(order)?.sub(&Series::one(order));
    let by_parts = codim_gf_by_parts(order)?;
    if target != by_parts {
        return Ok(false);
    }
    if !target.coeff(0).is_zero() {
        return Ok(false);
    }
    for n in 1..=order {
        if target.coeff(n) != rat(codim_sequence(n as u64)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `g(x) = prod_i (1 - x^(a_i + 1)) / (1 - x)`, a polynomial of degree
/// `a1 + a2 + a3`, obtained by series division.
pub fn mie_gf_poly(alpha: &DimVector) -> Result<Series> {
    if !alpha.is_balanced() {
        return Err(Error::pre(format!("{alpha} is not balanced")));
    }
    let degree = alpha.x_total() as usize;
    let num = alpha.x().iter().fold(vec![1i64], |acc, &a| {
        poly_mul(&acc, &one_minus_x_pow(a as usize + 1))
    });
    let one_x = one_minus_x_pow(1);
    let den = poly_mul(&poly_mul(&one_x, &one_x), &one_x);
    expand_rational(&num, &den, degree)
}

impl Series {
    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }
}
