//! Resistance distances, resistive eccentricity, Kirchhoff index and
//! resistance curvature of unit-resistor networks.
//!
//! The exact route inverts the grounded Laplacian with fraction-free integer
//! elimination: if `Y = d * L0^{-1}` then `R(i,j) = (Y_ii + Y_jj - 2 Y_ij) / d`,
//! which lets eccentricities and the Kirchhoff index be summed in integers
//! before a single rational is formed.

mod closed_forms;
mod composition;
mod deletion;
mod report;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::numerics::{bareiss, ExactNumber, Matrix, Scalar, SolveError};

pub use closed_forms::{complete_closed_forms, cycle_closed_forms, CompleteClosedForms, CycleClosedForms};
pub use composition::{block_accelerated_resistance, compose_across_cut, Composition};
pub use deletion::deletion_update;
pub use report::{analyze, curvature_vector, kirchhoff_index, resistive_eccentricity, ReportJson, ResistanceReport};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EngineError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("need at least {min} vertices, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge endpoints must differ (got {0} twice)")]
    SameEndpoints(usize),
    #[error("matrix must be square with dimension {expected}, got {rows}x{cols}")]
    BadMatrix { expected: usize, rows: usize, cols: usize },
    #[error("distance {d} out of range 0..={max}")]
    DistanceOutOfRange { d: usize, max: usize },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Combinatorial Laplacian `D - A`.
pub fn laplacian<T: Scalar>(g: &Graph) -> Matrix<T> {
    Matrix::from_fn(g.n(), g.n(), |i, j| {
        if i == j {
            T::from_i64(g.degree(i) as i64)
        } else if g.has_edge(i, j) {
            -T::one()
        } else {
            T::zero()
        }
    })
}

/// `d * L0^{-1}` for the Laplacian grounded at `ground`, as integers.
///
/// Row/column `ground` is all zeros in `numer`, and `numer` is indexed by the
/// original vertex numbers.
#[derive(Debug, Clone)]
pub(crate) struct GroundedInverse {
    n: usize,
    denom: BigInt,
    numer: Vec<BigInt>,
}

impl GroundedInverse {
    pub(crate) fn new(g: &Graph, ground: usize) -> Result<Self, EngineError> {
        let n = g.n();
        if ground >= n {
            return Err(EngineError::VertexOutOfRange { vertex: ground, n });
        }
        if !g.is_connected() {
            return Err(EngineError::Disconnected);
        }
        let keep: Vec<usize> = (0..n).filter(|&v| v != ground).collect();
        let m = keep.len();
        let mut a = vec![0i128; m * m];
        let mut b = vec![0i128; m * m];
        for (r, &u) in keep.iter().enumerate() {
            b[r * m + r] = 1;
            for (c, &v) in keep.iter().enumerate() {
                a[r * m + c] = if u == v {
                    g.degree(u) as i128
                } else if g.has_edge(u, v) {
                    -1
                } else {
                    0
                };
            }
        }
        let ff = match bareiss::solve(&a, &b, m, m)? {
            Some(ff) => bareiss::FractionFree {
                denom: BigInt::from(ff.denom),
                numer: ff.numer.into_iter().map(BigInt::from).collect(),
            },
            None => {
                let big = |v: Vec<i128>| v.into_iter().map(BigInt::from).collect::<Vec<_>>();
                bareiss::solve(&big(a), &big(b), m, m)?.expect("BigInt arithmetic does not overflow")
            }
        };
        let mut numer = vec![BigInt::zero(); n * n];
        for (r, &u) in keep.iter().enumerate() {
            for (c, &v) in keep.iter().enumerate() {
                numer[u * n + v] = ff.numer[r * m + c].clone();
            }
        }
        Ok(Self {
            n,
            denom: ff.denom,
            numer,
        })
    }

    #[inline]
    fn y(&self, i: usize, j: usize) -> &BigInt {
        &self.numer[i * self.n + j]
    }

    pub(crate) fn matrix(&self) -> Matrix<ExactNumber> {
        let n = self.n;
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                let num = self.y(i, i) + self.y(j, j) - self.y(i, j) * 2;
                let v = ExactNumber::new(num, self.denom.clone());
                out.set(j, i, v.clone());
                out.set(i, j, v);
            }
        }
        out
    }

    /// `sum_v R(u, v)` for every `u`.
    pub(crate) fn eccentricities(&self) -> Vec<ExactNumber> {
        let n = self.n;
        let trace: BigInt = (0..n).map(|i| self.y(i, i)).sum();
        (0..n)
            .map(|u| {
                let row: BigInt = (0..n).map(|v| self.y(u, v)).sum();
                let num = self.y(u, u) * n + &trace - row * 2;
                ExactNumber::new(num, self.denom.clone())
            })
            .collect()
    }

    pub(crate) fn kirchhoff(&self) -> ExactNumber {
        let n = self.n;
        let trace: BigInt = (0..n).map(|i| self.y(i, i)).sum();
        let total: BigInt = self.numer.iter().sum();
        ExactNumber::new(trace * n - total, self.denom.clone())
    }
}

/// Exact resistance matrix, grounding the Laplacian at vertex 0.
pub fn resistance_matrix(g: &Graph) -> Result<Matrix<ExactNumber>, EngineError> {
    resistance_matrix_grounded(g, 0)
}

/// Exact resistance matrix with an explicit grounding vertex. The result does
/// not depend on `ground`.
pub fn resistance_matrix_grounded(g: &Graph, ground: usize) -> Result<Matrix<ExactNumber>, EngineError> {
    Ok(GroundedInverse::new(g, ground)?.matrix())
}

/// Exact `sum_v R(u, v)` per vertex without materialising the matrix.
pub fn eccentricities(g: &Graph) -> Result<Vec<ExactNumber>, EngineError> {
    Ok(GroundedInverse::new(g, 0)?.eccentricities())
}

/// Exact Kirchhoff index without materialising the matrix.
pub fn kirchhoff(g: &Graph) -> Result<ExactNumber, EngineError> {
    Ok(GroundedInverse::new(g, 0)?.kirchhoff())
}

/// Resistance matrix in any [`Scalar`] domain via a generic solve of the
/// grounded Laplacian.
pub fn resistance_matrix_in<T: Scalar>(g: &Graph) -> Result<Matrix<T>, EngineError> {
    let n = g.n();
    if !g.is_connected() {
        return Err(EngineError::Disconnected);
    }
    if n == 1 {
        return Ok(Matrix::zeros(1, 1));
    }
    let l = laplacian::<T>(g);
    let grounded = Matrix::from_fn(n - 1, n - 1, |i, j| l.get(i + 1, j + 1).clone());
    let x = T::solve_many(&grounded, &Matrix::identity(n - 1))?;
    let xe = |i: usize, j: usize| {
        if i == 0 || j == 0 {
            T::zero()
        } else {
            x.get(i - 1, j - 1).clone()
        }
    };
    Ok(Matrix::from_fn(n, n, |i, j| {
        if i == j {
            T::zero()
        } else {
            xe(i, i) + xe(j, j) - (xe(i, j) + xe(i, j))
        }
    }))
}

/// Floating-point resistance matrix for fast screening.
pub fn resistance_matrix_f64(g: &Graph) -> Result<Matrix<f64>, EngineError> {
    resistance_matrix_in::<f64>(g)
}

/// Floating-point eccentricities `sum_v R(u, v)`.
pub fn eccentricities_f64(g: &Graph) -> Result<Vec<f64>, EngineError> {
    let r = resistance_matrix_f64(g)?;
    Ok(r.rows_iter().map(|row| row.iter().sum()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::q;

    fn ints(rows: usize, v: &[i64]) -> Matrix<ExactNumber> {
        Matrix::from_vec(rows, rows, v.iter().map(|&x| ExactNumber::from(x)).collect()).unwrap()
    }

    #[test]
    fn laplacian_examples() {
        let k2: Matrix<ExactNumber> = laplacian(&Graph::complete(2).unwrap());
        assert_eq!(k2, ints(2, &[1, -1, -1, 1]));
        let p3: Matrix<ExactNumber> = laplacian(&Graph::path(3).unwrap());
        assert_eq!(p3, ints(3, &[1, -1, 0, -1, 2, -1, 0, -1, 1]));
        let one: Matrix<ExactNumber> = laplacian(&Graph::empty(1).unwrap());
        assert_eq!(one, ints(1, &[0]));
        let l: Matrix<f64> = laplacian(&Graph::cycle(5).unwrap());
        assert!(l.rows_iter().all(|r| r.iter().sum::<f64>() == 0.0));
    }

    #[test]
    fn resistance_examples() {
        let p3 = resistance_matrix(&Graph::path(3).unwrap()).unwrap();
        assert_eq!(p3, ints(3, &[0, 1, 2, 1, 0, 1, 2, 1, 0]));
        let c4 = resistance_matrix(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!(c4.get(0, 1), &q(3, 4));
        assert_eq!(c4.get(0, 2), &q(1, 1));
        let k3 = resistance_matrix(&Graph::complete(3).unwrap()).unwrap();
        assert!((0..3).all(|i| (0..3).all(|j| i == j || k3.get(i, j) == &q(2, 3))));
        assert_eq!(resistance_matrix(&Graph::empty(1).unwrap()).unwrap(), ints(1, &[0]));
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(resistance_matrix(&g), Err(EngineError::Disconnected));
        assert_eq!(resistance_matrix_f64(&g), Err(EngineError::Disconnected));
    }

    #[test]
    fn grounding_does_not_matter() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (1, 4)]).unwrap();
        let r0 = resistance_matrix(&g).unwrap();
        for ground in 1..6 {
            assert_eq!(resistance_matrix_grounded(&g, ground).unwrap(), r0);
        }
        assert!(matches!(
            resistance_matrix_grounded(&g, 6),
            Err(EngineError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn integer_shortcuts_match_matrix() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let r = resistance_matrix(&g).unwrap();
        let rows: Vec<ExactNumber> = r.rows_iter().map(|row| row.iter().sum()).collect();
        assert_eq!(eccentricities(&g).unwrap(), rows);
        let half: ExactNumber = rows.iter().sum::<ExactNumber>() / q(2, 1);
        assert_eq!(kirchhoff(&g).unwrap(), half);
    }

    #[test]
    fn generic_exact_route_matches_integer_route() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        assert_eq!(
            resistance_matrix_in::<ExactNumber>(&g).unwrap(),
            resistance_matrix(&g).unwrap()
        );
    }

    #[test]
    fn big_graph_overflows_into_bigint() {
        // spanning-tree counts of K_n grow as n^(n-2) and leave i128 territory
        let g = Graph::complete(40).unwrap();
        let r = resistance_matrix(&g).unwrap();
        assert_eq!(r.get(3, 17), &q(2, 40));
    }
}
