//! Finite-dimensional modules over `A = k<x,y>/(x^3 - 1, y^2 - 1)`, given by
//! a pair of matrices `(X, Y)`.

mod families;
mod invariants;
mod triangular;

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{Cyclotomic, Matrix, Rational, RowSpace};
use crate::dimvec::DimVector;
use crate::error::{Error, Result};

pub use families::{one_dim, three_dim, two_dim_m, two_dim_n};
pub use invariants::{
    locus_line_roots, locus_lines_through, non_simple_locus_n3, three_dim_simple_predicted,
    trace_invariants, TraceInvariants,
};
pub use triangular::diagonalize_triangular;

/// Eigenvalue of `Y`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Result<Sign> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(Error::pre(format!("sign must be +1 or -1, got {v}"))),
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_cyclotomic(self) -> Cyclotomic {
        Cyclotomic::from_int(self.value())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Sign> {
        match s.trim() {
            "+" | "+1" | "1" => Ok(Sign::Plus),
            "-" | "-1" => Ok(Sign::Minus),
            other => Err(Error::Parse(format!("invalid sign {other:?}"))),
        }
    }
}

/// A module over `A`, stored as `X = rho(x)` and `Y = rho(y)`.
///
/// Construction checks only shapes; [`verify_relations`] checks `X^3 = Y^2 = I`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawRepresentation")]
pub struct Representation {
    n: usize,
    #[serde(rename = "X")]
    x: Matrix,
    #[serde(rename = "Y")]
    y: Matrix,
}

#[derive(Deserialize)]
struct RawRepresentation {
    n: usize,
    #[serde(rename = "X")]
    x: Matrix,
    #[serde(rename = "Y")]
    y: Matrix,
}

impl TryFrom<RawRepresentation> for Representation {
    type Error = Error;

    fn try_from(raw: RawRepresentation) -> Result<Self> {
        let rep = Representation::new(raw.x, raw.y)?;
        if rep.n != raw.n {
            return Err(Error::ShapeMismatch(format!(
                "declared n = {} but matrices are {}x{}",
                raw.n, rep.n, rep.n
            )));
        }
        Ok(rep)
    }
}

impl Representation {
    pub fn new(x: Matrix, y: Matrix) -> Result<Self> {
        if !x.is_square() || !y.is_square() || x.rows() != y.rows() {
            return Err(Error::ShapeMismatch(format!(
                "X is {}x{}, Y is {}x{}; both must be n x n",
                x.rows(),
                x.cols(),
                y.rows(),
                y.cols()
            )));
        }
        Ok(Representation { n: x.rows(), x, y })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn x(&self) -> &Matrix {
        &self.x
    }

    pub fn y(&self) -> &Matrix {
        &self.y
    }

    /// Simultaneous conjugation `(P^-1 X P, P^-1 Y P)`.
    pub fn conjugate(&self, p: &Matrix) -> Result<Representation> {
        let pinv = p.inverse()?;
        Representation::new(pinv.mul(&self.x)?.mul(p)?, pinv.mul(&self.y)?.mul(p)?)
    }

    /// Evaluates a word given as a sequence of letters, leftmost first.
    pub fn eval_word(&self, word: &[Letter]) -> Result<Matrix> {
        let mut m = Matrix::identity(self.n);
        for l in word {
            m = m.mul(match l {
                Letter::X => &self.x,
                Letter::Y => &self.y,
            })?;
        }
        Ok(m)
    }

    fn ensure_relations(&self) -> Result<()> {
        if verify_relations(self) {
            Ok(())
        } else {
            Err(Error::pre("X^3 = I and Y^2 = I must hold"))
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Letter {
    X,
    Y,
}

/// True iff `X^3 = I` and `Y^2 = I` exactly.
pub fn verify_relations(rep: &Representation) -> bool {
    let x3 = rep.x.pow(3).map(|m| m.is_identity()).unwrap_or(false);
    let y2 = rep.y.pow(2).map(|m| m.is_identity()).unwrap_or(false);
    x3 && y2
}

/// Projectors onto the eigenspaces of `X` for `1, w, w^2`:
/// `E_z = (I + z^-1 X + z^-2 X^2) / 3`.
pub fn x_idempotents(rep: &Representation) -> Result<[Matrix; 3]> {
    let x2 = rep.x.mul(&rep.x)?;
    let third = Rational::new(1.into(), 3.into());
    let make = |k: i64| -> Result<Matrix> {
        let sum = Matrix::identity(rep.n)
            .add(&rep.x.scale(&Cyclotomic::omega_pow(-k)))?
            .add(&x2.scale(&Cyclotomic::omega_pow(-2 * k)))?;
        Ok(sum.scale_rational(&third))
    };
    Ok([make(0)?, make(1)?, make(2)?])
}

/// Projectors onto the `+1` and `-1` eigenspaces of `Y`: `(I +/- Y) / 2`.
pub fn y_idempotents(rep: &Representation) -> Result<[Matrix; 2]> {
    let half = Rational::new(1.into(), 2.into());
    let id = Matrix::identity(rep.n);
    Ok([
        id.add(&rep.y)?.scale_rational(&half),
        id.sub(&rep.y)?.scale_rational(&half),
    ])
}

/// Eigenspace dimensions of `X` and `Y`, read off as ranks of the projectors.
pub fn dimension_vector_of(rep: &Representation) -> Result<DimVector> {
    rep.ensure_relations()?;
    let ex = x_idempotents(rep)?;
    let fy = y_idempotents(rep)?;
    let r = |m: &Matrix| m.rank() as u64;
    let alpha = DimVector::new([r(&ex[0]), r(&ex[1]), r(&ex[2])], [r(&fy[0]), r(&fy[1])])?;
    if !alpha.is_balanced() || alpha.x_total() != rep.n as u64 {
        return Err(Error::Inconsistent(format!(
            "eigenspace ranks {alpha} do not add up to {}",
            rep.n
        )));
    }
    Ok(alpha)
}

/// Dimension of the image algebra `span{words in X, Y}` inside `M_n`.
///
/// Computed by closing `{I}` under left multiplication by `X` and `Y`,
/// keeping only words that enlarge the span.
pub fn span_rank(rep: &Representation) -> Result<usize> {
    rep.ensure_relations()?;
    let n = rep.n;
    let mut space = RowSpace::new(n * n);
    let mut queue = VecDeque::new();
    let id = Matrix::identity(n);
    space.insert(id.entries().to_vec())?;
    queue.push_back(id);
    while let Some(m) = queue.pop_front() {
        if space.is_full() {
            break;
        }
        for g in [&rep.x, &rep.y] {
            let w = g.mul(&m)?;
            if space.insert(w.entries().to_vec())? {
                queue.push_back(w);
            }
        }
    }
    Ok(space.rank())
}

/// A module is simple iff its words span all of `M_n` (Burnside).
pub fn is_simple(rep: &Representation) -> Result<bool> {
    Ok(span_rank(rep)? == rep.n * rep.n)
}

/// Words in alternating normal form `x^a0 y x^a1 y ...` with at most `depth`
/// blocks, where each x-block is `x` or `x^2`. Includes the empty word.
pub fn alternating_words(depth: usize) -> Vec<Vec<Letter>> {
    let mut out: Vec<Vec<Letter>> = vec![Vec::new()];
    // frontier entries: (word, last block was an x-block)
    let mut frontier: Vec<(Vec<Letter>, Option<bool>)> = vec![(Vec::new(), None)];
    for _ in 0..depth {
        let mut next = Vec::new();
        for (w, last_x) in &frontier {
            if *last_x != Some(true) {
                for k in 1..=2 {
                    let mut v = w.clone();
                    v.extend(std::iter::repeat_n(Letter::X, k));
                    next.push((v, Some(true)));
                }
            }
            if *last_x != Some(false) {
                let mut v = w.clone();
                v.push(Letter::Y);
                next.push((v, Some(false)));
            }
        }
        out.extend(next.iter().map(|(w, _)| w.clone()));
        frontier = next;
    }
    out
}

/// Traces of all alternating words with at most `2n - 2` blocks.
pub fn word_traces(rep: &Representation) -> Result<Vec<Cyclotomic>> {
    let depth = (2 * rep.n).saturating_sub(2).max(1);
    alternating_words(depth)
        .iter()
        .map(|w| Ok(rep.eval_word(w)?.trace()))
        .collect()
}

/// Necessary condition for `a` and `b` to be conjugate: equal dimension and
/// equal traces on every alternating word of depth `<= 2n - 2`. For
/// semi-simple modules equal traces also imply conjugacy; for non-split
/// extensions they do not (see [`hom_from_one_dim`]).
pub fn traces_agree(a: &Representation, b: &Representation) -> Result<bool> {
    Ok(a.n == b.n && word_traces(a)? == word_traces(b)?)
}

/// `dim Hom(k(w^power, sign), M)`: the dimension of the common eigenspace
/// `ker(X - w^power) ∩ ker(Y - sign)`. An isomorphism invariant.
pub fn hom_from_one_dim(rep: &Representation, omega_power: u8, sign: Sign) -> Result<usize> {
    let n = rep.n;
    let zx = Matrix::identity(n).scale(&Cyclotomic::omega_pow(omega_power as i64));
    let zy = Matrix::identity(n).scale(&sign.as_cyclotomic());
    let a = rep.x.sub(&zx)?;
    let b = rep.y.sub(&zy)?;
    let mut rows = a.to_rows();
    rows.extend(b.to_rows());
    Ok(Matrix::from_rows(rows)?.nullity())
}

/// The one-dimensional submodules of `rep`, as `(omega_power, sign, multiplicity)`.
pub fn one_dim_submodules(rep: &Representation) -> Result<Vec<(u8, Sign, usize)>> {
    let mut out = Vec::new();
    for p in 0..3u8 {
        for s in [Sign::Plus, Sign::Minus] {
            let d = hom_from_one_dim(rep, p, s)?;
            if d > 0 {
                out.push((p, s, d));
            }
        }
    }
    Ok(out)
}
