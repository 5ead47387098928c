//! Extension and deformation counts derived from the Euler form.

use serde::Serialize;

use crate::dimvec::{euler_form, westbury_conditions, DimVector};
use crate::error::{Error, Result};

/// A split `alpha = beta + gamma`, with `beta` the sub and `gamma` the quotient
/// dimension vector of an extension `0 -> W -> E -> V -> 0`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Decomposition {
    pub beta: DimVector,
    pub gamma: DimVector,
}

impl Decomposition {
    pub fn new(beta: DimVector, gamma: DimVector) -> Result<Self> {
        if !beta.is_balanced() || !gamma.is_balanced() {
            return Err(Error::pre("both parts of a decomposition must be balanced"));
        }
        if beta.is_zero() || gamma.is_zero() {
            return Err(Error::pre("both parts of a decomposition must be nonzero"));
        }
        Ok(Decomposition { beta, gamma })
    }

    pub fn total(&self) -> Result<DimVector> {
        self.beta.checked_add(&self.gamma)
    }
}

fn require_balanced(v: &DimVector) -> Result<()> {
    if v.is_balanced() {
        Ok(())
    } else {
        Err(Error::pre(format!("{v} is not balanced")))
    }
}

/// `dim Ext^1(M, N) = dim Hom(M, N) - <beta, gamma>` for simples `M`, `N`,
/// where `dim Hom` is 1 for isomorphic simples and 0 otherwise.
pub fn ext1_dim_simples(beta: &DimVector, gamma: &DimVector, isomorphic: bool) -> Result<i64> {
    require_balanced(beta)?;
    require_balanced(gamma)?;
    Ok(i64::from(isomorphic) - euler_form(beta, gamma))
}

/// Tangent dimension of deformations preserving the extension:
/// `1 - <beta + gamma, beta + gamma> + <beta, gamma>`.
pub fn deformation_tangent_dim(beta: &DimVector, gamma: &DimVector) -> Result<i64> {
    require_balanced(beta)?;
    require_balanced(gamma)?;
    let alpha = beta.checked_add(gamma)?;
    Ok(1 - euler_form(&alpha, &alpha) + euler_form(beta, gamma))
}

/// Codimension `-<beta, gamma>` of the non-simple locus at the extension.
pub fn codim_nonsimple(beta: &DimVector, gamma: &DimVector) -> Result<i64> {
    require_balanced(beta)?;
    require_balanced(gamma)?;
    Ok(-euler_form(beta, gamma))
}

/// All splits of `alpha` into two nonzero admissible parts, ordered by `beta`.
pub fn admissible_decompositions(alpha: &DimVector) -> Vec<Decomposition> {
    alpha
        .sub_vectors()
        .filter(westbury_conditions)
        .filter_map(|beta| {
            let gamma = alpha.checked_sub(&beta)?;
            westbury_conditions(&gamma).then_some(Decomposition { beta, gamma })
        })
        .collect()
}

/// Minimum of `-<beta, gamma>` over [`admissible_decompositions`].
///
/// Ties go to the lexicographically smallest `gamma`, so the small quotient
/// is reported as `gamma`. The form is symmetric, so every witness appears
/// with both orientations.
pub fn min_codim(alpha: &DimVector) -> Result<(i64, Decomposition)> {
    if !westbury_conditions(alpha) {
        return Err(Error::pre(format!(
            "{alpha} does not satisfy the admissibility conditions"
        )));
    }
    if alpha.x_total() < 2 {
        return Err(Error::pre("min_codim needs |alpha| >= 2"));
    }
    admissible_decompositions(alpha)
        .into_iter()
        .map(|d| (-euler_form(&d.beta, &d.gamma), d))
        .min_by(|(c1, d1), (c2, d2)| c1.cmp(c2).then(d1.gamma.cmp(&d2.gamma)))
        .ok_or_else(|| Error::pre(format!("{alpha} has no admissible decomposition")))
}

/// Consistency identity: `1 + n^2 - sum of squares = tangent + codim` for
/// `alpha = beta + gamma`.
pub fn check_codim_identity(beta: &DimVector, gamma: &DimVector) -> Result<bool> {
    let alpha = beta.checked_add(gamma)?;
    let n = alpha.x_total() as i64;
    let squares: i64 = alpha.to_array().iter().map(|&c| (c * c) as i64).sum();
    let d = 1 + n * n - squares;
    Ok(d == deformation_tangent_dim(beta, gamma)? + codim_nonsimple(beta, gamma)?)
}
