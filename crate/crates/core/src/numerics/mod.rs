//! Exact rational and floating-point linear algebra.
//!
//! Exact solves clear denominators row by row and run fraction-free
//! elimination; float solves use Gaussian elimination with partial pivoting.

pub(crate) mod bareiss;
mod exact;
mod matrix;

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

pub use exact::{q, ExactNumber, ParseExactError};
pub use matrix::Matrix;

/// Relative pivot threshold below which a float system is declared singular.
pub const FLOAT_PIVOT_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolveError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("structurally singular: no nonzero pivot in column {column}")]
    StructurallySingular { column: usize },
    #[error("numerically singular: pivot {pivot:e} in column {column} is below tolerance")]
    NumericallySingular { column: usize, pivot: f64 },
}

/// Number domain usable by the solvers.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self;

    /// Solves `A X = B` for every column of `B`.
    fn solve_many(a: &Matrix<Self>, b: &Matrix<Self>) -> Result<Matrix<Self>, SolveError>;
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn solve_many(a: &Matrix<f64>, b: &Matrix<f64>) -> Result<Matrix<f64>, SolveError> {
        check_shapes(a, b)?;
        let n = a.rows();
        let k = b.cols();
        let mut m: Vec<f64> = Vec::with_capacity(n * (n + k));
        let mut scale = Vec::with_capacity(n);
        for i in 0..n {
            m.extend_from_slice(a.row(i));
            m.extend_from_slice(b.row(i));
            scale.push(a.row(i).iter().fold(0f64, |s, v| s.max(v.abs())));
        }
        let w = n + k;
        for c in 0..n {
            let p = (c..n)
                .max_by(|&x, &y| m[x * w + c].abs().total_cmp(&m[y * w + c].abs()))
                .expect("nonempty pivot range");
            let pivot = m[p * w + c];
            if pivot.abs() <= FLOAT_PIVOT_TOLERANCE * scale[p] || pivot == 0.0 {
                return Err(SolveError::NumericallySingular { column: c, pivot });
            }
            if p != c {
                for j in 0..w {
                    m.swap(p * w + j, c * w + j);
                }
                scale.swap(p, c);
            }
            for i in c + 1..n {
                let f = m[i * w + c] / pivot;
                if f == 0.0 {
                    continue;
                }
                for j in c..w {
                    m[i * w + j] -= f * m[c * w + j];
                }
            }
        }
        let mut x = vec![0f64; n * k];
        for r in 0..k {
            for i in (0..n).rev() {
                let mut s = m[i * w + n + r];
                for j in i + 1..n {
                    s -= m[i * w + j] * x[j * k + r];
                }
                x[i * k + r] = s / m[i * w + i];
            }
        }
        Matrix::from_vec(n, k, x)
    }
}

impl Scalar for ExactNumber {
    fn from_i64(v: i64) -> Self {
        ExactNumber::from(v)
    }

    fn solve_many(a: &Matrix<Self>, b: &Matrix<Self>) -> Result<Matrix<Self>, SolveError> {
        check_shapes(a, b)?;
        let n = a.rows();
        let k = b.cols();
        // scale each row of [A | B] by the lcm of its denominators
        let mut ia = Vec::with_capacity(n * n);
        let mut ib = Vec::with_capacity(n * k);
        for i in 0..n {
            let lcm = a
                .row(i)
                .iter()
                .chain(b.row(i))
                .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            let scaled = |x: &ExactNumber| x.numer() * (&lcm / x.denom());
            ia.extend(a.row(i).iter().map(scaled));
            ib.extend(b.row(i).iter().map(scaled));
        }
        let ff = bareiss::solve_wide(&ia, &ib, n, k)?;
        let x = ff
            .numer
            .into_iter()
            .map(|y| ExactNumber::new(y, ff.denom.clone()))
            .collect();
        Matrix::from_vec(n, k, x)
    }
}

fn check_shapes<T>(a: &Matrix<T>, b: &Matrix<T>) -> Result<(), SolveError> {
    if !a.is_square() {
        return Err(SolveError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if b.rows() != a.rows() {
        return Err(SolveError::DimensionMismatch {
            expected: a.rows(),
            found: b.rows(),
        });
    }
    Ok(())
}

/// Solves `a x = b`.
pub fn solve_linear_system<T: Scalar>(a: &Matrix<T>, b: &[T]) -> Result<Vec<T>, SolveError> {
    Ok(T::solve_many(a, &Matrix::column(b))?.into_vec())
}

pub fn invert<T: Scalar>(a: &Matrix<T>) -> Result<Matrix<T>, SolveError> {
    if !a.is_square() {
        return Err(SolveError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    T::solve_many(a, &Matrix::identity(a.rows()))
}
