use num_traits::Zero;

use crate::arith::Matrix;
use crate::error::{Error, Result};

/// For an upper triangular, diagonalisable `Z`, returns an upper triangular
/// invertible `U` with `U^-1 Z U` diagonal (with the diagonal of `Z`).
///
/// Entries are cleared by conjugating with `I + c E_ij` in order of
/// increasing `j - i`, `c = z_ij / (z_jj - z_ii)`. Each step only changes
/// entries farther from the diagonal. An entry between equal eigenvalues must
/// already be zero when it is reached, otherwise `Z` has a Jordan block.
pub fn diagonalize_triangular(z: &Matrix) -> Result<Matrix> {
    if !z.is_upper_triangular() {
        return Err(Error::pre("matrix must be square and upper triangular"));
    }
    let n = z.rows();
    let mut d = z.clone();
    let mut u = Matrix::identity(n);
    for span in 1..n {
        for i in 0..n - span {
            let j = i + span;
            if d[(i, j)].is_zero() {
                continue;
            }
            let gap = &d[(j, j)] - &d[(i, i)];
            if gap.is_zero() {
                return Err(Error::pre(format!(
                    "entry ({}, {}) couples equal eigenvalues; matrix is not diagonalisable",
                    i + 1,
                    j + 1
                )));
            }
            let c = d[(i, j)].checked_div(&gap)?;
            // D <- (I - c E_ij) D (I + c E_ij): column j += c col i, then row i -= c row j
            for r in 0..=i {
                let t = &c * &d[(r, i)];
                d[(r, j)] += &t;
            }
            for s in j..n {
                let t = &c * &d[(j, s)];
                d[(i, s)] -= &t;
            }
            // U <- U (I + c E_ij)
            for r in 0..n {
                let t = &c * &u[(r, i)];
                u[(r, j)] += &t;
            }
        }
    }
    if !d.is_diagonal() {
        return Err(Error::Inconsistent(
            "elimination left off-diagonal entries".into(),
        ));
    }
    Ok(u)
}
