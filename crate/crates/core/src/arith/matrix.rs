//! Dense matrices over Q(w) with exact Gaussian elimination.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Cyclotomic, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Cyclotomic>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Cyclotomic>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Cyclotomic::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Cyclotomic::one();
        }
        m
    }

    pub fn diagonal(entries: &[Cyclotomic]) -> Self {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    /// Builds a matrix from rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<Cyclotomic>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Cyclotomic::from_int(x)).collect())
                .collect(),
        )
    }

    /// Elementary matrix `E_ij` (a single 1 at `(i, j)`).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        m[(i, j)] = Cyclotomic::one();
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Cyclotomic] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Cyclotomic>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |a, b| a - b)
    }

    fn zip_with(
        &self,
        rhs: &Matrix,
        f: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic,
    ) -> Result<Matrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| f(a, b))
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, c: &Cyclotomic) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn scale_rational(&self, r: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.scale(r)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("power of a non-square matrix".into()));
        }
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn trace(&self) -> Cyclotomic {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .sum()
    }

    pub fn diag(&self) -> Vec<Cyclotomic> {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)].is_zero()))
    }

    /// Rank by Gaussian elimination. The pivot for each column is the first
    /// nonzero entry at or below the current row.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut r = 0;
        for col in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, col)].inv().expect("pivot is nonzero");
            for i in r + 1..m.rows {
                if m[(i, col)].is_zero() {
                    continue;
                }
                let f = &m[(i, col)] * &inv;
                m.sub_row_multiple(i, r, &f, col);
            }
            r += 1;
        }
        r
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Inverse by Gauss-Jordan elimination on `[A | I]`.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(
                "inverse of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let p = (col..n)
                .find(|&i| !a[(i, col)].is_zero())
                .ok_or(Error::Singular)?;
            a.swap_rows(col, p);
            inv.swap_rows(col, p);
            let s = a[(col, col)].inv()?;
            a.scale_row(col, &s);
            inv.scale_row(col, &s);
            for i in 0..n {
                if i == col || a[(i, col)].is_zero() {
                    continue;
                }
                let f = a[(i, col)].clone();
                a.sub_row_multiple(i, col, &f, 0);
                inv.sub_row_multiple(i, col, &f, 0);
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            for c in 0..self.cols {
                self.data.swap(i * self.cols + c, j * self.cols + c);
            }
        }
    }

    fn scale_row(&mut self, i: usize, s: &Cyclotomic) {
        for c in 0..self.cols {
            self[(i, c)] *= s;
        }
    }

    /// `row_i -= f * row_j`, touching columns `from..`.
    fn sub_row_multiple(&mut self, i: usize, j: usize, f: &Cyclotomic, from: usize) {
        for c in from..self.cols {
            if self[(j, c)].is_zero() {
                continue;
            }
            let d = f * &self[(j, c)];
            self[(i, c)] -= &d;
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Cyclotomic;
    fn index(&self, (i, j): (usize, usize)) -> &Cyclotomic {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Cyclotomic {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

/// JSON array of rows of `"a+b*w"` strings.
impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Cyclotomic>>::deserialize(deserializer)?;
        Matrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// Incrementally maintained row space. Each stored row has a leading 1 and
/// zeros in the pivot columns of the rows stored before it.
#[derive(Clone, Debug, Default)]
pub struct RowSpace {
    width: usize,
    basis: Vec<(usize, Vec<Cyclotomic>)>,
}

impl RowSpace {
    pub fn new(width: usize) -> Self {
        RowSpace {
            width,
            basis: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.width
    }

    /// Inserts `v`, returning `true` if it was independent of the current span.
    pub fn insert(&mut self, mut v: Vec<Cyclotomic>) -> Result<bool> {
        if v.len() != self.width {
            return Err(Error::ShapeMismatch(format!(
                "vector of length {} in a space of width {}",
                v.len(),
                self.width
            )));
        }
        for (p, row) in &self.basis {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &(&f * r);
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let s = v[p].inv()?;
        for x in v.iter_mut() {
            *x *= &s;
        }
        self.basis.push((p, v));
        Ok(true)
    }

    pub fn contains(&self, v: &[Cyclotomic]) -> Result<bool> {
        let mut probe = self.clone();
        Ok(!probe.insert(v.to_vec())?)
    }
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    a.mul(b)
}

pub fn mat_rank(a: &Matrix) -> usize {
    a.rank()
}

pub fn mat_inverse(a: &Matrix) -> Result<Matrix> {
    a.inverse()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(k: i64) -> Cyclotomic {
        Cyclotomic::omega_pow(k)
    }

    #[test]
    fn identity_is_neutral() {
        let m = Matrix::from_ints(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]).unwrap();
        assert_eq!(Matrix::identity(3).mul(&m).unwrap(), m);
        assert_eq!(m.mul(&Matrix::identity(3)).unwrap(), m);
    }

    #[test]
    fn elementary_product() {
        let e12 = Matrix::unit(3, 0, 1);
        let e23 = Matrix::unit(3, 1, 2);
        assert_eq!(e12.mul(&e23).unwrap(), Matrix::unit(3, 0, 2));
        assert_eq!(e23.mul(&e12).unwrap(), Matrix::zeros(3, 3));
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let a = Matrix::zeros(2, 3);
        assert!(matches!(a.mul(&a), Err(Error::ShapeMismatch(_))));
        assert!(Matrix::new(2, 2, vec![Cyclotomic::one()]).is_err());
        assert!(Matrix::from_ints(&[&[1, 2], &[3]]).is_err());
    }

    #[test]
    fn rank_basics() {
        assert_eq!(Matrix::zeros(3, 3).rank(), 0);
        for n in 0..6 {
            assert_eq!(Matrix::identity(n).rank(), n);
        }
        let m = Matrix::from_ints(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.nullity(), 1);
    }

    #[test]
    fn rank_over_the_cyclotomic_field() {
        // rows (1, w) and (w^2, 1) are dependent: w^2 * (1, w) = (w^2, 1)
        let m = Matrix::from_rows(vec![vec![w(0), w(1)], vec![w(2), w(0)]]).unwrap();
        assert_eq!(m.rank(), 1);
        assert!(m.inverse().is_err());
    }

    #[test]
    fn diagonal_inverse() {
        let d = Matrix::diagonal(&[w(1), w(2), w(0)]);
        assert_eq!(d.inverse().unwrap(), Matrix::diagonal(&[w(2), w(1), w(0)]));
        assert_eq!(Matrix::identity(4).inverse().unwrap(), Matrix::identity(4));
    }

    #[test]
    fn singular_inverse_fails() {
        let m = Matrix::from_ints(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(m.inverse(), Err(Error::Singular));
    }

    #[test]
    fn row_space_tracks_rank() {
        let mut rs = RowSpace::new(3);
        let v = |a: i64, b: i64, c: i64| vec![a.into(), b.into(), c.into()];
        assert!(rs.insert(v(1, 2, 3)).unwrap());
        assert!(rs.insert(v(0, 1, 1)).unwrap());
        assert!(!rs.insert(v(1, 3, 4)).unwrap());
        assert!(rs.contains(&v(2, 5, 7)).unwrap());
        assert!(rs.insert(v(0, 0, 5)).unwrap());
        assert!(rs.is_full());
    }

    fn arb_entry() -> impl Strategy<Value = Cyclotomic> {
        // small entries with many zeros so that rank deficiency actually occurs
        prop_oneof![
            3 => Just(Cyclotomic::zero()),
            4 => (-3i64..4, -2i64..3).prop_map(|(a, b)| Cyclotomic::from_int(a) + w(1).scale(&Rational::from_integer(b.into()))),
        ]
    }

    fn arb_matrix(max: usize) -> impl Strategy<Value = Matrix> {
        (1..=max, 1..=max).prop_flat_map(|(r, c)| {
            prop::collection::vec(arb_entry(), r * c)
                .prop_map(move |d| Matrix::new(r, c, d).unwrap())
        })
    }

    fn arb_invertible(n: usize) -> impl Strategy<Value = Matrix> {
        // unit lower times unit upper triangular is always invertible
        (
            prop::collection::vec(arb_entry(), n * n),
            prop::collection::vec(arb_entry(), n * n),
        )
            .prop_map(move |(l, u)| {
                let mut lo = Matrix::identity(n);
                let mut up = Matrix::identity(n);
                for i in 0..n {
                    for j in 0..i {
                        lo[(i, j)] = l[i * n + j].clone();
                        up[(j, i)] = u[j * n + i].clone();
                    }
                }
                lo.mul(&up).unwrap()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rank_nullity(m in arb_matrix(6)) {
            prop_assert_eq!(m.rank() + m.nullity(), m.cols());
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rank_invariant_under_invertible_multiplication(
            (m, p) in (1usize..=6, 1usize..=6).prop_flat_map(|(n, c)| (
                prop::collection::vec(arb_entry(), n * c).prop_map(move |d| Matrix::new(n, c, d).unwrap()),
                arb_invertible(n),
            ))
        ) {
            let r = m.rank();
            prop_assert_eq!(p.mul(&m).unwrap().rank(), r);
            let mut swapped = m.to_rows();
            swapped.reverse();
            prop_assert_eq!(Matrix::from_rows(swapped).unwrap().rank(), r);
        }

        #[test]
        fn inverse_is_two_sided(p in (1usize..=5).prop_flat_map(arb_invertible)) {
            let inv = p.inverse().unwrap();
            prop_assert!(p.mul(&inv).unwrap().is_identity());
            prop_assert!(inv.mul(&p).unwrap().is_identity());
        }
    }
}
