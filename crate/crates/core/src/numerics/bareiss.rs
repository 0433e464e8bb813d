//! Fraction-free (Bareiss) elimination over the integers.
//!
//! Every intermediate value is a minor of the augmented input, so the
//! divisions are exact. The `i128` instantiation reports overflow as `None`
//! and callers retry with `BigInt`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::SolveError;

pub(crate) trait FfInt: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// `a*b - c*d`
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self>;
    fn exact_div(&self, d: &Self) -> Option<Self>;
    fn mul(a: &Self, b: &Self) -> Option<Self>;
    fn sub(a: &Self, b: &Self) -> Option<Self>;
}

impl FfInt for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    #[inline]
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)
    }
    #[inline]
    fn exact_div(&self, d: &Self) -> Option<Self> {
        debug_assert_eq!(self % d, 0);
        self.checked_div(*d)
    }
    #[inline]
    fn mul(a: &Self, b: &Self) -> Option<Self> {
        a.checked_mul(*b)
    }
    #[inline]
    fn sub(a: &Self, b: &Self) -> Option<Self> {
        a.checked_sub(*b)
    }
}

impl FfInt for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        Some(a * b - c * d)
    }
    fn exact_div(&self, d: &Self) -> Option<Self> {
        Some(self / d)
    }
    fn mul(a: &Self, b: &Self) -> Option<Self> {
        Some(a * b)
    }
    fn sub(a: &Self, b: &Self) -> Option<Self> {
        Some(a - b)
    }
}

/// Solution `X = numer / denom` of `A X = B` with integer `numer`.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct FractionFree<T> {
    pub denom: T,
    /// `n x k`, row-major.
    pub numer: Vec<T>,
}

/// Solves `A X = B` for `n x n` integer `a` and `n x k` integer `b`.
///
/// `Ok(None)` signals arithmetic overflow in `T`.
pub(crate) fn solve<T: FfInt>(a: &[T], b: &[T], n: usize, k: usize) -> Result<Option<FractionFree<T>>, SolveError> {
    debug_assert_eq!(a.len(), n * n);
    debug_assert_eq!(b.len(), n * k);
    if n == 0 {
        return Ok(Some(FractionFree {
            denom: T::one(),
            numer: Vec::new(),
        }));
    }
    let w = n + k;
    let mut m = Vec::with_capacity(n * w);
    for i in 0..n {
        m.extend_from_slice(&a[i * n..(i + 1) * n]);
        m.extend_from_slice(&b[i * k..(i + 1) * k]);
    }

    let mut prev = T::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r * w + c].is_zero()) else {
            return Err(SolveError::StructurallySingular { column: c });
        };
        if p != c {
            for j in 0..w {
                m.swap(p * w + j, c * w + j);
            }
        }
        for i in c + 1..n {
            for j in c + 1..w {
                let v = T::mul_sub(&m[c * w + c], &m[i * w + j], &m[i * w + c], &m[c * w + j]);
                let Some(v) = v.and_then(|v| v.exact_div(&prev)) else {
                    return Ok(None);
                };
                m[i * w + j] = v;
            }
            m[i * w + c] = T::zero();
        }
        prev = m[c * w + c].clone();
    }

    // back substitution on U y = denom * b', exact because y = adj(A) b up to sign
    let denom = prev;
    let mut numer = vec![T::zero(); n * k];
    for r in 0..k {
        for i in (0..n).rev() {
            let mut acc = T::mul(&denom, &m[i * w + n + r]);
            for j in i + 1..n {
                acc = acc.and_then(|s| T::sub(&s, &T::mul(&m[i * w + j], &numer[j * k + r])?));
            }
            let Some(y) = acc.and_then(|s| s.exact_div(&m[i * w + i])) else {
                return Ok(None);
            };
            numer[i * k + r] = y;
        }
    }
    Ok(Some(FractionFree { denom, numer }))
}

/// Runs [`solve`] in `i128` and falls back to `BigInt` on overflow.
pub(crate) fn solve_wide(a: &[BigInt], b: &[BigInt], n: usize, k: usize) -> Result<FractionFree<BigInt>, SolveError> {
    let narrow = |v: &[BigInt]| -> Option<Vec<i128>> { v.iter().map(|x| i128::try_from(x).ok()).collect() };
    if let (Some(a128), Some(b128)) = (narrow(a), narrow(b)) {
        if let Some(ff) = solve(&a128, &b128, n, k)? {
            return Ok(FractionFree {
                denom: ff.denom.into(),
                numer: ff.numer.into_iter().map(BigInt::from).collect(),
            });
        }
    }
    Ok(solve(a, b, n, k)?.expect("BigInt arithmetic does not overflow"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_system() {
        // [[2,1],[1,3]] x = [1,2] -> x = (1/5, 3/5)
        let ff = solve::<i128>(&[2, 1, 1, 3], &[1, 2], 2, 1).unwrap().unwrap();
        assert_eq!(ff.denom, 5);
        assert_eq!(ff.numer, vec![1, 3]);
    }

    #[test]
    fn needs_row_swap() {
        let ff = solve::<i128>(&[0, 1, 1, 0], &[1, 0, 0, 1], 2, 2).unwrap().unwrap();
        let d = ff.denom;
        let x: Vec<_> = ff.numer.iter().map(|v| v / d).collect();
        assert_eq!(x, vec![0, 1, 1, 0]);
    }

    #[test]
    fn singular() {
        assert_eq!(
            solve::<i128>(&[1, 1, 1, 1], &[1, 0], 2, 1),
            Err(SolveError::StructurallySingular { column: 1 })
        );
    }

    #[test]
    fn overflow_falls_back() {
        let big = BigInt::from(i128::MAX / 3);
        let a = vec![big.clone(), BigInt::from(1), BigInt::from(1), big.clone()];
        let b = vec![BigInt::from(1), BigInt::from(0)];
        assert!(solve::<i128>(
            &a.iter().map(|x| i128::try_from(x).unwrap()).collect::<Vec<_>>(),
            &[1, 0],
            2,
            1
        )
        .unwrap()
        .is_none());
        let ff = solve_wide(&a, &b, 2, 1).unwrap();
        // x0 = big / (big^2 - 1)
        let det = &big * &big - 1;
        let lhs = &ff.numer[0] * &det;
        assert_eq!(lhs, &big * &ff.denom);
    }
}
