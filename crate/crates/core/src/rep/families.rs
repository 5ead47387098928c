//! Explicit low-dimensional families.

use num_traits::{One, Zero};

use super::{verify_relations, Representation, Sign};
use crate::arith::{Cyclotomic, Matrix};
use crate::error::{Error, Result};

fn checked(rep: Representation, what: &str) -> Result<Representation> {
    if verify_relations(&rep) {
        Ok(rep)
    } else {
        Err(Error::Inconsistent(format!(
            "{what} violates X^3 = Y^2 = I"
        )))
    }
}

fn nontrivial_root(omega_power: u8) -> Result<Cyclotomic> {
    match omega_power {
        1 | 2 => Ok(Cyclotomic::omega_pow(omega_power as i64)),
        p => Err(Error::pre(format!("omega power must be 1 or 2, got {p}"))),
    }
}

/// The simple module `k(w^power, sign)`: `x -> w^power`, `y -> sign`.
pub fn one_dim(omega_power: u8, sign: Sign) -> Result<Representation> {
    if omega_power > 2 {
        return Err(Error::pre(format!(
            "omega power must be 0, 1 or 2, got {omega_power}"
        )));
    }
    let x = Matrix::diagonal(&[Cyclotomic::omega_pow(omega_power as i64)]);
    let y = Matrix::diagonal(&[sign.as_cyclotomic()]);
    checked(Representation::new(x, y)?, "one_dim")
}

/// `M_s`: `x -> [[1, 1], [0, z]]`, `y -> [[1, 0], [s, -1]]` with `z = w^power != 1`.
///
/// Simple unless `s = 0` or `s = 2(z - 1)`.
pub fn two_dim_m(s: &Cyclotomic, omega_power: u8) -> Result<Representation> {
    let z = nontrivial_root(omega_power)?;
    let one = Cyclotomic::one();
    let zero = Cyclotomic::zero();
    let x = Matrix::from_rows(vec![vec![one.clone(), one.clone()], vec![zero.clone(), z]])?;
    let y = Matrix::from_rows(vec![
        vec![one, zero],
        vec![s.clone(), Cyclotomic::from_int(-1)],
    ])?;
    checked(Representation::new(x, y)?, "M_s")
}

/// `N_t`: `x -> [[1, 0], [1, z]]`, `y -> [[1, t], [0, -1]]` with `z = w^power != 1`.
pub fn two_dim_n(t: &Cyclotomic, omega_power: u8) -> Result<Representation> {
    let z = nontrivial_root(omega_power)?;
    let one = Cyclotomic::one();
    let zero = Cyclotomic::zero();
    let x = Matrix::from_rows(vec![vec![one.clone(), zero.clone()], vec![one.clone(), z]])?;
    let y = Matrix::from_rows(vec![
        vec![one, t.clone()],
        vec![zero, Cyclotomic::from_int(-1)],
    ])?;
    checked(Representation::new(x, y)?, "N_t")
}

/// Three-dimensional module `x -> PQ`, `y -> PQP` with
///
/// ```text
/// P = [[l1, l1 l3/l2 + l2, l2], [0, l2, l2], [0, 0, l3]]
/// Q = [[l3, 0, 0], [-l2, l2, 0], [l2, -l1 l3/l2 - l2, l1]]
/// ```
///
/// Requires every `l_i != 0` and `(l1 l2 l3)^2 = 1`.
pub fn three_dim(l1: &Cyclotomic, l2: &Cyclotomic, l3: &Cyclotomic) -> Result<Representation> {
    if l1.is_zero() || l2.is_zero() || l3.is_zero() {
        return Err(Error::pre("lambda parameters must be nonzero"));
    }
    let prod = &(l1 * l2) * l3;
    if (&prod * &prod) != Cyclotomic::one() {
        return Err(Error::pre(format!(
            "(l1 l2 l3)^2 = 1 is required, got ({prod})^2"
        )));
    }
    let zero = Cyclotomic::zero();
    let l13_2 = (l1 * l3).checked_div(l2)?;
    let p = Matrix::from_rows(vec![
        vec![l1.clone(), &l13_2 + l2, l2.clone()],
        vec![zero.clone(), l2.clone(), l2.clone()],
        vec![zero.clone(), zero.clone(), l3.clone()],
    ])?;
    let q = Matrix::from_rows(vec![
        vec![l3.clone(), zero.clone(), zero.clone()],
        vec![-l2, l2.clone(), zero],
        vec![l2.clone(), -(&l13_2 + l2), l1.clone()],
    ])?;
    let x = p.mul(&q)?;
    let y = x.mul(&p)?;
    checked(Representation::new(x, y)?, "three_dim")
}
