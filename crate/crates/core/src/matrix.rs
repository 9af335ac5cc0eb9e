//! Dense row-major matrices.
//!
//! Two arithmetic layers share one storage type: exact `i64` arithmetic with
//! overflow detection (adjacency powers, quotient powers, commutation checks)
//! and floating-point arithmetic over any [`Scalar`].

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense matrix stored row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Copy> Mat<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    /// Builds from a rectangular row slice; panics if the rows are ragged.
    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.iter().flatten().copied().collect() }
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

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn to_nested(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
}

impl<T: Copy + num_traits::Zero> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![T::zero(); rows * cols] }
    }
}

impl<T: Copy + num_traits::Zero + num_traits::One> Mat<T> {
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }
}

impl<T> std::ops::Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Exact integer arithmetic. Every product goes through `checked_*` so an
/// overflow is reported instead of wrapping.
impl Mat<i64> {
    pub fn checked_matmul(&self, rhs: &Mat<i64>) -> Result<Mat<i64>> {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = Mat::<i64>::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let term = a.checked_mul(rhs[(k, j)]).ok_or(Error::IntegerOverflow)?;
                    out[(i, j)] = out[(i, j)].checked_add(term).ok_or(Error::IntegerOverflow)?;
                }
            }
        }
        Ok(out)
    }

    /// Exact power by repeated multiplication.
    pub fn checked_pow(&self, exponent: usize) -> Result<Mat<i64>> {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut out = Mat::identity(self.rows);
        for step in 1..=exponent {
            out =
                out.checked_matmul(self).map_err(|_| Error::WalkCountOverflow { length: step })?;
        }
        Ok(out)
    }

    pub fn trace(&self) -> i64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn to_scalar<S: Scalar>(&self) -> Mat<S> {
        Mat::from_fn(self.rows, self.cols, |i, j| S::of_i64(self[(i, j)]))
    }
}

/// Floating-point arithmetic over any [`Scalar`].
impl<S: Scalar> Mat<S> {
    pub fn matmul(&self, rhs: &Mat<S>) -> Mat<S> {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == S::zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] = out[(i, j)] + a * rhs[(k, j)];
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Mat<S>) -> Mat<S> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self[(i, j)] + rhs[(i, j)])
    }

    pub fn sub(&self, rhs: &Mat<S>) -> Mat<S> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self[(i, j)] - rhs[(i, j)])
    }

    pub fn scaled(&self, c: S) -> Mat<S> {
        Mat::from_fn(self.rows, self.cols, |i, j| self[(i, j)] * c)
    }

    /// Subtracts `c` from the diagonal, i.e. `self - c*I`.
    pub fn shifted(&self, c: S) -> Mat<S> {
        assert!(self.is_square());
        let mut out = self.clone();
        for i in 0..self.rows {
            out[(i, i)] = out[(i, i)] - c;
        }
        out
    }

    pub fn max_abs(&self) -> S {
        self.data.iter().fold(S::zero(), |acc, &x| acc.max(x.abs()))
    }

    pub fn max_abs_diff(&self, rhs: &Mat<S>) -> S {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        self.sub(rhs).max_abs()
    }

    pub fn frobenius_norm(&self) -> S {
        self.data.iter().fold(S::zero(), |acc, &x| acc + x * x).sqrt()
    }
}
