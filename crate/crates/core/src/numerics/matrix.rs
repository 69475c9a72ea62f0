use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::rational::{denominator_lcm, format_rational, rat, to_f64, Rational};
use super::{FloatMatrix, IndexSet, RationalVector};
use crate::error::Error;

/// Dense square matrix of exact rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(n: usize, entries: Vec<Rational>) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: entries.len(),
            });
        }
        Ok(RationalMatrix { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, Error> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        Self::new(n, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor for integer literals; panics on an empty matrix.
    pub fn from_i64<const N: usize>(rows: &[[i64; N]; N]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect())
            .expect("non-empty square literal")
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self, Error> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect())
    }

    pub fn zeros(n: usize) -> Self {
        RationalMatrix {
            n,
            entries: vec![Rational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(&vec![Rational::one(); n])
    }

    pub fn diagonal(d: &[Rational]) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n);
        for (i, v) in d.iter().enumerate() {
            m[(i, i)] = v.clone();
        }
        m
    }

    /// Permutation matrix `P` with `P[i][perm[i]] = 1`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zeros(n);
        for (i, &j) in perm.iter().enumerate() {
            m[(i, j)] = Rational::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.n)
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &RationalMatrix) -> Self {
        let n = self.n;
        assert_eq!(n, other.n, "matrix dimensions differ");
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &RationalVector) -> RationalVector {
        assert_eq!(self.n, x.len(), "vector length differs from matrix dimension");
        self.rows()
            .map(|r| r.iter().zip(x.iter()).map(|(a, b)| a * b).sum())
            .collect::<Vec<_>>()
            .into()
    }

    /// `Aᵀx` without materializing the transpose.
    pub fn transpose_mul_vec(&self, x: &RationalVector) -> RationalVector {
        let n = self.n;
        assert_eq!(n, x.len(), "vector length differs from matrix dimension");
        (0..n)
            .map(|j| (0..n).map(|i| &self[(i, j)] * &x[i]).sum())
            .collect::<Vec<_>>()
            .into()
    }

    pub fn add(&self, other: &RationalMatrix) -> Self {
        assert_eq!(self.n, other.n, "matrix dimensions differ");
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        RationalMatrix { n: self.n, entries }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalMatrix {
            n: self.n,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        RationalMatrix {
            n: self.n,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }

    /// `(A + Aᵀ) / 2`.
    pub fn symmetric_part(&self) -> Self {
        self.add(&self.transpose()).scale(&Rational::new(1.into(), 2.into()))
    }

    /// Rows and columns `alpha` of `A`, in increasing order.
    pub fn principal_submatrix(&self, alpha: &IndexSet) -> Result<Self, Error> {
        if alpha.is_empty() {
            return Err(Error::Precondition("principal submatrix of an empty index set".into()));
        }
        if let Some(bad) = alpha.iter().find(|&i| i >= self.n) {
            return Err(Error::IndexOutOfRange {
                index: bad + 1,
                n: self.n,
            });
        }
        let k = alpha.len();
        let mut entries = Vec::with_capacity(k * k);
        for i in alpha.iter() {
            for j in alpha.iter() {
                entries.push(self[(i, j)].clone());
            }
        }
        Self::new(k, entries)
    }

    /// Determinant by integer Bareiss elimination. Each row is first cleared
    /// of denominators, so the elimination never forms a fraction.
    pub fn determinant(&self) -> Rational {
        let (mut rows, scale) = self.integer_rows(&[]);
        match bareiss(&mut rows, self.n) {
            Some(sign) => {
                let d = rows[self.n - 1][self.n - 1].clone() * BigInt::from(sign);
                Rational::new(d, scale)
            }
            None => Rational::zero(),
        }
    }

    /// Exact solution of `Ax = b`, or `None` when `A` is singular.
    pub fn solve(&self, b: &RationalVector) -> Option<RationalVector> {
        assert_eq!(self.n, b.len(), "right-hand side length differs from matrix dimension");
        self.solve_many(std::slice::from_ref(b)).map(|mut v| v.remove(0))
    }

    /// Solves `AX = B` column by column; `None` when singular.
    pub fn solve_many(&self, rhs: &[RationalVector]) -> Option<Vec<RationalVector>> {
        let n = self.n;
        let (mut rows, _) = self.integer_rows(rhs);
        bareiss(&mut rows, n)?;
        let mut out = Vec::with_capacity(rhs.len());
        for c in 0..rhs.len() {
            let mut x = vec![Rational::zero(); n];
            for i in (0..n).rev() {
                let mut acc = Rational::from_integer(rows[i][n + c].clone());
                for (j, xj) in x.iter().enumerate().skip(i + 1) {
                    acc -= xj * &rows[i][j];
                }
                x[i] = acc / &rows[i][i];
            }
            out.push(RationalVector(x));
        }
        Some(out)
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let cols = self.solve_many(&(0..n).map(|i| RationalVector::unit(n, i)).collect::<Vec<_>>())?;
        let mut inv = Self::zeros(n);
        for (j, col) in cols.iter().enumerate() {
            for i in 0..n {
                inv[(i, j)] = col[i].clone();
            }
        }
        Some(inv)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn has_negative_entry(&self) -> bool {
        self.entries.iter().any(Signed::is_negative)
    }

    pub fn to_float(&self) -> FloatMatrix {
        FloatMatrix::new(self.n, self.entries.iter().map(to_f64).collect())
    }

    /// Rows of `[A | rhs...]` scaled to integers; returns them with the product
    /// of the scale factors applied to the `A` part.
    fn integer_rows(&self, rhs: &[RationalVector]) -> (Vec<Vec<BigInt>>, BigInt) {
        let n = self.n;
        let mut total = BigInt::one();
        let rows = (0..n)
            .map(|i| {
                let row = self.row(i);
                let extra: Vec<&Rational> = rhs.iter().map(|b| &b[i]).collect();
                let l = denominator_lcm(row.iter().chain(extra.iter().copied()));
                total *= &l;
                row.iter()
                    .chain(extra.iter().copied())
                    .map(|v| (v * Rational::from_integer(l.clone())).to_integer())
                    .collect()
            })
            .collect();
        (rows, total)
    }
}

/// Fraction-free forward elimination on the first `n` columns. Returns the
/// sign of the row permutation, or `None` if a zero pivot column is found.
fn bareiss(rows: &mut [Vec<BigInt>], n: usize) -> Option<i32> {
    let width = rows.first().map_or(0, Vec::len);
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n {
        let p = (k..n).find(|&p| !rows[p][k].is_zero())?;
        if p != k {
            rows.swap(p, k);
            sign = -sign;
        }
        let (top, bottom) = rows.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            let factor = row[k].clone();
            for j in k + 1..width {
                row[j] = (&row[j] * &pivot_row[k] - &factor * &pivot_row[j]) / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = pivot_row[k].clone();
    }
    Some(sign)
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.n + j]
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(format_rational).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for (i, row) in cells.chunks(self.n).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{c:>width$}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl Serialize for RationalMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.n))?;
        for row in self.rows() {
            seq.serialize_element(&row.iter().map(format_rational).collect::<Vec<_>>())?;
        }
        seq.end()
    }
}
