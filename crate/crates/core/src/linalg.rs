//! Dense matrices over an exact ring, with elimination routines for fields.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest square matrix accepted by [`Matrix::cofactor_determinant`].
pub const MAX_COFACTOR_SIZE: usize = 8;

/// Exact commutative ring operations used by the generic matrix code.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// A ring in which nonzero elements can (usually) be inverted.
///
/// `inverse` returns `None` for zero and for elements the implementation
/// cannot invert exactly.
pub trait Field: Ring {
    fn inverse(&self) -> Option<Self>;

    fn divided(&self, other: &Self) -> Option<Self> {
        other.inverse().map(|inv| self.times(&inv))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
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

    /// Entry at 0-based position `(r, c)`.
    pub fn get(&self, r: usize, c: usize) -> &T {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> Vec<T> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn col(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<U>(&self, f: impl FnMut(&T) -> Result<U>) -> Result<Matrix<U>> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    /// The submatrix on the given (0-based) row and column indices, in order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |r, c| {
            self.get(rows[r], cols[c]).clone()
        })
    }

    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::Shape("hstack row mismatch".into()));
        }
        Ok(Matrix::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        }))
    }

    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::Shape("vstack column mismatch".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }

    /// Diagonal matrix with the given entries.
    pub fn diagonal(entries: &[T]) -> Self {
        let n = entries.len();
        Matrix::from_fn(n, n, |r, c| {
            if r == c {
                entries[r].clone()
            } else {
                T::zero()
            }
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                let b = other.get(k, c);
                if b.is_zero() {
                    continue;
                }
                acc = acc.plus(&a.times(b));
            }
            acc
        }))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a.plus(b))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a.minus(b))
    }

    fn zip(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "{}x{} versus {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        self.map(Ring::negated)
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|a| a.times(s))
    }

    pub fn trace(&self) -> T {
        let n = self.rows.min(self.cols);
        (0..n).fold(T::zero(), |acc, i| acc.plus(self.get(i, i)))
    }

    /// Commutator `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    /// Determinant by cofactor expansion along rows, memoized on the set of
    /// columns already used. Works over any commutative ring.
    pub fn cofactor_determinant(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n > MAX_COFACTOR_SIZE {
            return Err(Error::DeterminantTooLarge(n, MAX_COFACTOR_SIZE));
        }
        let mut memo: HashMap<u32, T> = HashMap::new();
        Ok(self.minor_det(0, 0, &mut memo))
    }

    fn minor_det(&self, row: usize, used: u32, memo: &mut HashMap<u32, T>) -> T {
        let n = self.rows;
        if row == n {
            return T::one();
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut acc = T::zero();
        let mut free_before = 0usize;
        for c in 0..n {
            if used & (1 << c) != 0 {
                continue;
            }
            let a = self.get(row, c);
            if !a.is_zero() {
                let sub = self.minor_det(row + 1, used | (1 << c), memo);
                if !sub.is_zero() {
                    let term = a.times(&sub);
                    acc = if free_before.is_multiple_of(2) {
                        acc.plus(&term)
                    } else {
                        acc.minus(&term)
                    };
                }
            }
            free_before += 1;
        }
        memo.insert(used, acc.clone());
        acc
    }
}

impl<T: Field> Matrix<T> {
    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for c in 0..m.cols {
            if prow == m.rows {
                break;
            }
            let Some(p) = (prow..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(p, prow);
            let inv = m
                .get(prow, c)
                .inverse()
                .expect("nonzero pivot must be invertible");
            for k in 0..m.cols {
                let v = m.get(prow, k).times(&inv);
                m.set(prow, k, v);
            }
            for r in 0..m.rows {
                if r == prow {
                    continue;
                }
                let f = m.get(r, c).clone();
                if f.is_zero() {
                    continue;
                }
                for k in 0..m.cols {
                    let v = m.get(r, k).minus(&f.times(m.get(prow, k)));
                    m.set(r, k, v);
                }
            }
            pivots.push(c);
            prow += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(a * self.cols + k, b * self.cols + k);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel; each vector has a 1 in its free column.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![T::zero(); self.cols];
            v[free] = T::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = r.get(i, free).negated();
            }
            basis.push(v);
        }
        basis
    }

    /// Kernel basis as the columns of a matrix.
    pub fn kernel_matrix(&self) -> Self {
        let basis = self.nullspace();
        Matrix::from_fn(self.cols, basis.len(), |r, c| basis[c][r].clone())
    }

    /// A canonical basis of the column space, as the columns of a matrix
    /// (the nonzero rows of the RREF of the transpose).
    pub fn column_space(&self) -> Self {
        let (r, pivots) = self.transpose().rref();
        Matrix::from_fn(self.rows, pivots.len(), |i, k| r.get(k, i).clone())
    }

    pub fn det(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = T::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !m.get(r, c).is_zero()) else {
                return Ok(T::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = det.negated();
            }
            let pivot = m.get(c, c).clone();
            det = det.times(&pivot);
            let inv = pivot.inverse().ok_or(Error::NotInvertible)?;
            for r in c + 1..n {
                let f = m.get(r, c).times(&inv);
                if f.is_zero() {
                    continue;
                }
                for k in c..n {
                    let v = m.get(r, k).minus(&f.times(m.get(c, k)));
                    m.set(r, k, v);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n)).ok()?;
        let (r, pivots) = aug.rref();
        if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
