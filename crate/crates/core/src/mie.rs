//! Maximally iterated extensions: how many there are, and the upper-triangular
//! involutions that parametrize them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::arith::{Cyclotomic, Matrix, Rational};
use crate::dimvec::{westbury_conditions, westbury_dim, DimVector};
use crate::error::{Error, Result};
use crate::rep::Sign;
use crate::series::mie_gf_poly;

/// Free off-diagonal entries of an involution, keyed by 0-based `(row, col)`.
pub type FreeEntries = BTreeMap<(usize, usize), Cyclotomic>;

/// `chi(1) = 1`, `chi(n) = sum_{i=1}^{n-1} chi(i) chi(n-i)`; `chi(n)` is the
/// Catalan number `C_{n-1}`.
pub fn chi(n: usize) -> Result<u128> {
    if n == 0 {
        return Err(Error::pre("chi is defined for n >= 1"));
    }
    let mut memo: Vec<u128> = vec![0, 1];
    for k in 2..=n {
        let mut s: u128 = 0;
        for i in 1..k {
            let term = memo[i]
                .checked_mul(memo[k - i])
                .ok_or(Error::Overflow("chi"))?;
            s = s.checked_add(term).ok_or(Error::Overflow("chi"))?;
        }
        memo.push(s);
    }
    Ok(memo[n])
}

fn require_admissible(alpha: &DimVector) -> Result<u64> {
    if !westbury_conditions(alpha) {
        return Err(Error::pre(format!("{alpha} is not admissible")));
    }
    Ok(alpha.x_total())
}

fn require_balanced(alpha: &DimVector) -> Result<()> {
    if !alpha.is_balanced() {
        return Err(Error::pre(format!("{alpha} is not balanced")));
    }
    Ok(())
}

/// `(n + d + 1) / 2` where `d` is the dimension of the simple locus.
pub fn mie_count_closed(alpha: &DimVector) -> Result<u64> {
    let n = require_admissible(alpha)? as i64;
    let d = westbury_dim(alpha)?;
    let total = n + d + 1;
    if total % 2 != 0 {
        return Err(Error::Inconsistent(format!("n + d is even for {alpha}")));
    }
    u64::try_from(total / 2).map_err(|_| Error::Inconsistent(format!("negative count for {alpha}")))
}

/// Number of `(a1, a2, a3)` with `0 <= a_i <= alpha_i` and `a1 + a2 + a3 = b1`.
/// Defined for any balanced `alpha`; it agrees with [`mie_count_closed`] on
/// admissible ones.
pub fn mie_count_enumerate(alpha: &DimVector) -> Result<u64> {
    require_balanced(alpha)?;
    let [x1, x2, x3] = alpha.x();
    let m = alpha.y()[0];
    let mut count = 0u64;
    for a1 in 0..=x1.min(m) {
        for a2 in 0..=x2.min(m - a1) {
            if m - a1 - a2 <= x3 {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Coefficient of `x^{b1}` in `prod_i (1 + x + ... + x^{alpha_i})`.
pub fn mie_count_gf(alpha: &DimVector) -> Result<u64> {
    require_balanced(alpha)?;
    let g = mie_gf_poly(alpha)?;
    let c = g.coeff(alpha.y()[0] as usize);
    if !c.is_integer() {
        return Err(Error::Inconsistent(
            "non-integral generating function coefficient".into(),
        ));
    }
    u64::try_from(c.to_integer()).map_err(|_| Error::Overflow("mie_count_gf"))
}

/// The diagonal of an upper-triangular involution.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignPattern {
    signs: Vec<Sign>,
}

impl SignPattern {
    pub fn new(signs: Vec<Sign>) -> Result<Self> {
        if signs.is_empty() {
            return Err(Error::pre("sign pattern must be nonempty"));
        }
        Ok(SignPattern { signs })
    }

    /// `+ - + - ...` of length `n`.
    pub fn alternating(n: usize) -> Result<Self> {
        let signs = (0..n)
            .map(|i| if i % 2 == 0 { Sign::Plus } else { Sign::Minus })
            .collect();
        SignPattern::new(signs)
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn sign(&self, i: usize) -> Sign {
        self.signs[i]
    }

    /// `(#plus, #minus)`.
    pub fn multiplicities(&self) -> (u64, u64) {
        let plus = self.signs.iter().filter(|&&s| s == Sign::Plus).count() as u64;
        (plus, self.signs.len() as u64 - plus)
    }

    /// Positions `i < j` with opposite signs, in row-major order.
    pub fn free_positions(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.signs[i] != self.signs[j] {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.signs {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for SignPattern {
    type Err = Error;

    /// Accepts `+-+` as well as comma-separated `1,-1,1` or `+,-,+`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let signs = if s.contains(',') {
            s.split(',')
                .map(str::parse)
                .collect::<Result<Vec<Sign>>>()?
        } else {
            s.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| match c {
                    '+' => Ok(Sign::Plus),
                    '-' => Ok(Sign::Minus),
                    other => Err(Error::Parse(format!("invalid sign character {other:?}"))),
                })
                .collect::<Result<Vec<Sign>>>()?
        };
        SignPattern::new(signs)
    }
}

impl Serialize for SignPattern {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn check_index(pattern: &SignPattern, i: usize) -> Result<()> {
    if i >= pattern.len() {
        return Err(Error::pre(format!(
            "index {i} out of range for pattern of length {}",
            pattern.len()
        )));
    }
    Ok(())
}

/// All chains `i = i_0 < i_1 < ... < i_{m+1} = k` with `m` odd and
/// `sign(i_r) = (-1)^r sign(i)`. Indices are 0-based and each chain includes
/// both endpoints.
pub fn chain_set(pattern: &SignPattern, i: usize, k: usize) -> Result<Vec<Vec<usize>>> {
    check_index(pattern, i)?;
    check_index(pattern, k)?;
    if i >= k {
        return Err(Error::pre("chain endpoints must satisfy i < k"));
    }
    if pattern.sign(i) != pattern.sign(k) {
        return Err(Error::pre("chain endpoints must carry the same sign"));
    }
    let mut out = Vec::new();
    let mut chain = vec![i];
    extend_chains(pattern, k, &mut chain, &mut out);
    Ok(out)
}

// Signs alternate along the chain, so the last interior index has the sign
// opposite to `k` exactly when the interior count is odd.
fn extend_chains(
    pattern: &SignPattern,
    k: usize,
    chain: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let last = *chain.last().expect("chain is never empty");
    let want = pattern.sign(last).flip();
    if chain.len() > 1 && want == pattern.sign(k) {
        let mut full = chain.clone();
        full.push(k);
        out.push(full);
    }
    for j in last + 1..k {
        if pattern.sign(j) == want {
            chain.push(j);
            extend_chains(pattern, k, chain, out);
            chain.pop();
        }
    }
}

fn validate_free(pattern: &SignPattern, free: &FreeEntries) -> Result<()> {
    let expected = pattern.free_positions();
    if free.len() != expected.len() || !expected.iter().all(|p| free.contains_key(p)) {
        let extra: Vec<_> = free.keys().filter(|p| !expected.contains(p)).collect();
        return Err(Error::pre(format!(
            "free entries must be exactly the {} opposite-sign positions above the diagonal \
             (got {} entries, unexpected: {extra:?})",
            expected.len(),
            free.len()
        )));
    }
    Ok(())
}

fn seed_matrix(pattern: &SignPattern, free: &FreeEntries) -> Matrix {
    let diag: Vec<Cyclotomic> = pattern.signs().iter().map(|s| s.as_cyclotomic()).collect();
    let mut y = Matrix::diagonal(&diag);
    for (&(i, j), v) in free {
        y[(i, j)] = v.clone();
    }
    y
}

fn ensure_involution(y: &Matrix) -> Result<()> {
    if y.mul(y)?.is_identity() {
        Ok(())
    } else {
        Err(Error::Inconsistent(
            "constructed matrix does not square to the identity".into(),
        ))
    }
}

/// The upper-triangular involution with the given diagonal and free entries,
/// solving `Y^2 = I` one superdiagonal at a time.
pub fn involution_forward(pattern: &SignPattern, free: &FreeEntries) -> Result<Matrix> {
    validate_free(pattern, free)?;
    let n = pattern.len();
    let mut y = seed_matrix(pattern, free);
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    for gap in 2..n {
        for i in 0..n - gap {
            let k = i + gap;
            if pattern.sign(i) != pattern.sign(k) {
                continue;
            }
            let mut s = Cyclotomic::from_int(0);
            for j in i + 1..k {
                s += &(&y[(i, j)] * &y[(j, k)]);
            }
            // y_ii = +-1, so dividing by 2 y_ii is multiplying by -y_ii / 2.
            let coeff = -&half * Rational::from_integer(BigInt::from(pattern.sign(i).value()));
            y[(i, k)] = s.scale(&coeff);
        }
    }
    ensure_involution(&y)?;
    Ok(y)
}

/// Same matrix as [`involution_forward`], with each determined entry given by
/// a sum over [`chain_set`]. A chain with `m = 2v + 1` interior indices
/// contributes `-y_ii * C_v / 2^m` times the product of the free entries
/// along it, `C_v = chi(v + 1)` being the Catalan number.
pub fn involution_closed(pattern: &SignPattern, free: &FreeEntries) -> Result<Matrix> {
    validate_free(pattern, free)?;
    let n = pattern.len();
    let mut y = seed_matrix(pattern, free);
    for i in 0..n {
        for k in i + 2..n {
            if pattern.sign(i) != pattern.sign(k) {
                continue;
            }
            let mut total = Cyclotomic::from_int(0);
            for chain in chain_set(pattern, i, k)? {
                let m = chain.len() - 2;
                let nu = (m - 1) / 2;
                let catalan = chi(nu + 1)?;
                let coeff = Rational::new(
                    BigInt::from(-pattern.sign(i).value()) * BigInt::from(catalan),
                    BigInt::from(2).pow(m as u32),
                );
                let mut prod = Cyclotomic::from_int(1);
                for w in chain.windows(2) {
                    prod *= &free[&(w[0], w[1])];
                }
                total += &prod.scale(&coeff);
            }
            y[(i, k)] = total;
        }
    }
    ensure_involution(&y)?;
    Ok(y)
}

/// Dimension `b1 * b2` of the affine space of upper-triangular involutions
/// with a fixed diagonal.
pub fn involution_space_dim(alpha: &DimVector) -> Result<u64> {
    require_balanced(alpha)?;
    let [b1, b2] = alpha.y();
    b1.checked_mul(b2)
        .ok_or(Error::Overflow("involution_space_dim"))
}

/// Dimension of the centralizer of a diagonal `X` with the given eigenvalue
/// multiplicities.
pub fn stabilizer_dim(x_multiplicities: [u64; 3]) -> Result<u64> {
    x_multiplicities.iter().try_fold(0u64, |acc, &a| {
        a.checked_mul(a)
            .and_then(|sq| acc.checked_add(sq))
            .ok_or(Error::Overflow("stabilizer_dim"))
    })
}

/// Dimension data for the correspondence between iterated extensions with a
/// given diagonal and involutions modulo the centralizer of `X`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct IndSummary {
    pub dim_y: u64,
    pub dim_gx: u64,
    /// 0-based `(row, col)` pairs.
    pub free_positions: Vec<(usize, usize)>,
}

pub fn ind_gamma_summary(alpha: &DimVector, pattern: &SignPattern) -> Result<IndSummary> {
    require_balanced(alpha)?;
    let (plus, minus) = pattern.multiplicities();
    if [plus, minus] != alpha.y() {
        return Err(Error::pre(format!(
            "pattern {pattern} has sign counts ({plus},{minus}) but {alpha} needs {:?}",
            alpha.y()
        )));
    }
    let free_positions = pattern.free_positions();
    let dim_y = involution_space_dim(alpha)?;
    if free_positions.len() as u64 != dim_y {
        return Err(Error::Inconsistent(
            "free position count differs from b1 * b2".into(),
        ));
    }
    Ok(IndSummary {
        dim_y,
        dim_gx: stabilizer_dim(alpha.x())?,
        free_positions,
    })
}
