//! Trace coordinates for three-dimensional modules.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::Representation;
use crate::arith::{Cyclotomic, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TraceInvariants {
    pub t_xy: Cyclotomic,
    pub t_xyx: Cyclotomic,
}

/// `t_xy = tr(XY)` and `t_xyx = tr(XYX)` for a three-dimensional module.
pub fn trace_invariants(rep: &Representation) -> Result<TraceInvariants> {
    if rep.dim() != 3 {
        return Err(Error::pre(format!(
            "trace invariants need n = 3, got n = {}",
            rep.dim()
        )));
    }
    let xy = rep.x().mul(rep.y())?;
    let xyx = xy.mul(rep.x())?;
    Ok(TraceInvariants {
        t_xy: xy.trace(),
        t_xyx: xyx.trace(),
    })
}

/// The three cube roots of `-1` in Q(w): `-1, -w, -w^2`.
pub fn locus_line_roots() -> [Cyclotomic; 3] {
    [
        -Cyclotomic::one(),
        -Cyclotomic::omega(),
        -Cyclotomic::omega_pow(2),
    ]
}

/// The roots `l` (among `-1, -w, -w^2`) whose line `t_xy - l t_xyx + 2 l^2 = 0`
/// contains the point.
pub fn locus_lines_through(t_xy: &Cyclotomic, t_xyx: &Cyclotomic) -> Vec<Cyclotomic> {
    locus_line_roots()
        .into_iter()
        .filter(|l| {
            let v = t_xy - &(l * t_xyx) + (l * l).scale(&Rational::from_integer(2.into()));
            v.is_zero()
        })
        .collect()
}

/// True iff `(t_xy, t_xyx)` lies on one of the three lines of the non-simple
/// locus. The lines describe the component `l1 l2 l3 = 1`.
pub fn non_simple_locus_n3(t_xy: &Cyclotomic, t_xyx: &Cyclotomic) -> bool {
    !locus_lines_through(t_xy, t_xyx).is_empty()
}

/// Predicted simplicity of the three-dimensional module with parameters
/// `l1, l2, l3`: simple iff `prod_i (l_i^3 + e) != 0` with `e = l1 l2 l3 = +-1`.
/// For `e = 1` this is `prod_i (l_i^3 + 1) != 0`.
pub fn three_dim_simple_predicted(
    l1: &Cyclotomic,
    l2: &Cyclotomic,
    l3: &Cyclotomic,
) -> Result<bool> {
    let e = &(l1 * l2) * l3;
    if &e * &e != Cyclotomic::one() {
        return Err(Error::pre(format!(
            "(l1 l2 l3)^2 = 1 is required, got ({e})^2"
        )));
    }
    Ok([l1, l2, l3]
        .iter()
        .all(|l| !(l.pow(3) + e.clone()).is_zero()))
}
