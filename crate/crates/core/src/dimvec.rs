//! Dimension vectors of the quiver K(3,2) and the dimension formulas attached
//! to them.
//!
//! A vector `(a1,a2,a3;b1,b2)` records the eigenspace dimensions of `X` for
//! the eigenvalues `1, w, w^2` and of `Y` for `+1, -1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Upper bound for every component and for `n` in the closed-form operations.
pub const MAX_N: u64 = 1_000_000;

/// Largest `n` accepted by [`enumerate_admissible`].
pub const MAX_ENUMERATE_N: u64 = 2_000;

/// Ordered lexicographically on `(a1, a2, a3, b1, b2)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DimVector {
    x: [u64; 3],
    y: [u64; 2],
}

impl DimVector {
    pub fn new(x: [u64; 3], y: [u64; 2]) -> Result<Self> {
        if x.iter().chain(&y).any(|&c| c > MAX_N) {
            return Err(Error::pre(format!(
                "dimension vector components must be <= {MAX_N}"
            )));
        }
        Ok(DimVector { x, y })
    }

    /// Shorthand for `new([a1, a2, a3], [b1, b2])`.
    pub fn from_parts(a1: u64, a2: u64, a3: u64, b1: u64, b2: u64) -> Result<Self> {
        DimVector::new([a1, a2, a3], [b1, b2])
    }

    /// X-eigenspace dimensions for eigenvalues `1, w, w^2`.
    pub fn x(&self) -> [u64; 3] {
        self.x
    }

    /// Y-eigenspace dimensions for eigenvalues `+1, -1`.
    pub fn y(&self) -> [u64; 2] {
        self.y
    }

    pub fn x_total(&self) -> u64 {
        self.x.iter().sum()
    }

    pub fn y_total(&self) -> u64 {
        self.y.iter().sum()
    }

    pub fn is_balanced(&self) -> bool {
        self.x_total() == self.y_total()
    }

    /// `n = a1 + a2 + a3`, defined when the vector is balanced.
    pub fn n(&self) -> Option<u64> {
        self.is_balanced().then(|| self.x_total())
    }

    pub fn is_zero(&self) -> bool {
        self.x_total() == 0 && self.y_total() == 0
    }

    pub fn to_array(&self) -> [u64; 5] {
        [self.x[0], self.x[1], self.x[2], self.y[0], self.y[1]]
    }

    pub fn checked_add(&self, other: &DimVector) -> Result<DimVector> {
        let a = self.to_array();
        let b = other.to_array();
        let s: [u64; 5] = std::array::from_fn(|i| a[i] + b[i]);
        DimVector::new([s[0], s[1], s[2]], [s[3], s[4]])
    }

    /// Componentwise difference, `None` if any component would go negative.
    pub fn checked_sub(&self, other: &DimVector) -> Option<DimVector> {
        let a = self.to_array();
        let b = other.to_array();
        let mut d = [0u64; 5];
        for i in 0..5 {
            d[i] = a[i].checked_sub(b[i])?;
        }
        Some(DimVector {
            x: [d[0], d[1], d[2]],
            y: [d[3], d[4]],
        })
    }

    /// All vectors `v` with `v <= self` componentwise, in lexicographic order.
    pub fn sub_vectors(&self) -> impl Iterator<Item = DimVector> + '_ {
        let [a1, a2, a3] = self.x;
        let [b1, b2] = self.y;
        (0..=a1).flat_map(move |c1| {
            (0..=a2).flat_map(move |c2| {
                (0..=a3).flat_map(move |c3| {
                    (0..=b1).flat_map(move |d1| {
                        (0..=b2).map(move |d2| DimVector {
                            x: [c1, c2, c3],
                            y: [d1, d2],
                        })
                    })
                })
            })
        })
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a1, a2, a3] = self.x;
        let [b1, b2] = self.y;
        write!(f, "({a1},{a2},{a3};{b1},{b2})")
    }
}

impl fmt::Debug for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses `(a1,a2,a3;b1,b2)`. Parentheses are optional and a comma may stand
/// in for the semicolon.
impl FromStr for DimVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected (a1,a2,a3;b1,b2), got {s:?}"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let t = t.strip_prefix('(').unwrap_or(&t);
        let t = t.strip_suffix(')').unwrap_or(t);
        let parts: Vec<&str> = t.split([',', ';']).collect();
        if parts.len() != 5 || t.matches(';').count() > 1 {
            return Err(bad());
        }
        if let Some(i) = t.find(';') {
            if t[..i].matches(',').count() != 2 {
                return Err(bad());
            }
        }
        let v: Vec<u64> = parts
            .iter()
            .map(|p| p.parse::<u64>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        DimVector::new([v[0], v[1], v[2]], [v[3], v[4]])
    }
}

impl Serialize for DimVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_array().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DimVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = <[u64; 5]>::deserialize(deserializer)?;
        DimVector::new([v[0], v[1], v[2]], [v[3], v[4]]).map_err(serde::de::Error::custom)
    }
}

fn as_i64(x: u64) -> i64 {
    // components are capped at MAX_N, so this never truncates
    x as i64
}

/// `(b1 + b2) - (a1 + a2 + a3)`.
pub fn theta(alpha: &DimVector) -> i64 {
    as_i64(alpha.y_total()) - as_i64(alpha.x_total())
}

/// The Euler form `sum a_i b_i + sum a'_j b'_j - |a| |b|`.
pub fn euler_form(alpha: &DimVector, beta: &DimVector) -> i64 {
    let xs: i64 = alpha
        .x
        .iter()
        .zip(&beta.x)
        .map(|(&p, &q)| as_i64(p) * as_i64(q))
        .sum();
    let ys: i64 = alpha
        .y
        .iter()
        .zip(&beta.y)
        .map(|(&p, &q)| as_i64(p) * as_i64(q))
        .sum();
    xs + ys - as_i64(alpha.x_total()) * as_i64(beta.x_total())
}

/// Balanced with `n >= 1`, and `a_i + b_j <= n` for all `i, j`.
///
/// The six one-dimensional vectors are admissible as well: they are the simple
/// roots, while the inequality would reject them.
pub fn westbury_conditions(alpha: &DimVector) -> bool {
    let Some(n) = alpha.n() else { return false };
    if n == 0 {
        return false;
    }
    n == 1 || alpha.x.iter().all(|&a| alpha.y.iter().all(|&b| a + b <= n))
}

fn sum_sq(v: &[u64]) -> i64 {
    v.iter().map(|&c| as_i64(c) * as_i64(c)).sum()
}

/// Dimension `1 + n^2 - sum a_i^2 - sum b_j^2` of the simple locus.
pub fn westbury_dim(alpha: &DimVector) -> Result<i64> {
    if !westbury_conditions(alpha) {
        return Err(Error::pre(format!(
            "{alpha} does not satisfy the admissibility conditions"
        )));
    }
    let n = as_i64(alpha.x_total());
    Ok(1 + n * n - sum_sq(&alpha.x) - sum_sq(&alpha.y))
}

/// Largest component dimension of the simple locus in dimension `n`:
/// `6m^2 + 2sm + s - 1` for `n = 6m + s` with `1 <= s <= 5`, and `6m^2 + 1`
/// for `n = 6m`.
pub fn max_simp_dim(n: u64) -> Result<i64> {
    if n == 0 {
        return Err(Error::pre("n must be >= 1"));
    }
    if n > MAX_N {
        return Err(Error::pre(format!("n must be <= {MAX_N}")));
    }
    let m = as_i64(n / 6);
    let s = as_i64(n % 6);
    Ok(if s == 0 {
        6 * m * m + 1
    } else {
        6 * m * m + 2 * s * m + s - 1
    })
}

/// Every admissible vector with `|alpha| = n`, sorted lexicographically.
pub fn enumerate_admissible(n: u64) -> Result<Vec<DimVector>> {
    if n == 0 {
        return Err(Error::pre("n must be >= 1"));
    }
    if n > MAX_ENUMERATE_N {
        return Err(Error::pre(format!(
            "enumeration is limited to n <= {MAX_ENUMERATE_N}"
        )));
    }
    let mut out = Vec::new();
    for a1 in 0..=n {
        for a2 in 0..=n - a1 {
            let a3 = n - a1 - a2;
            for b1 in 0..=n {
                let v = DimVector {
                    x: [a1, a2, a3],
                    y: [b1, n - b1],
                };
                if westbury_conditions(&v) {
                    out.push(v);
                }
            }
        }
    }
    Ok(out)
}
