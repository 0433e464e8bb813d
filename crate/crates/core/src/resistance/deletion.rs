use super::EngineError;
use crate::numerics::{Matrix, Scalar};

/// Restores the edge `{i, j}` to `G' = G - e`: given the resistance matrix of
/// `G'`, returns that of `G`.
///
/// `R_G(p,q) = R'(p,q) - [R'(p,i) + R'(q,j) - R'(p,j) - R'(q,i)]^2 / (4 (1 + R'(i,j)))`.
/// The diagonal of the result is set to zero.
pub fn deletion_update<T: Scalar>(r_prime: &Matrix<T>, i: usize, j: usize) -> Result<Matrix<T>, EngineError> {
    let n = r_prime.rows();
    if !r_prime.is_square() {
        return Err(EngineError::BadMatrix {
            expected: n,
            rows: r_prime.rows(),
            cols: r_prime.cols(),
        });
    }
    for v in [i, j] {
        if v >= n {
            return Err(EngineError::VertexOutOfRange { vertex: v, n });
        }
    }
    if i == j {
        return Err(EngineError::SameEndpoints(i));
    }
    let r = |a: usize, b: usize| r_prime.get(a, b).clone();
    let four = T::from_i64(4);
    let denom = four * (T::one() + r(i, j));
    Ok(Matrix::from_fn(n, n, |p, q| {
        if p == q {
            return T::zero();
        }
        let bracket = r(p, i) + r(q, j) - r(p, j) - r(q, i);
        r(p, q) - bracket.clone() * bracket / denom.clone()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::numerics::{q, ExactNumber};
    use crate::resistance::resistance_matrix;

    #[test]
    fn triangle_from_path() {
        let p3 = resistance_matrix(&Graph::path(3).unwrap()).unwrap();
        let c3 = deletion_update(&p3, 0, 2).unwrap();
        assert_eq!(c3.get(0, 1), &q(2, 3));
        assert_eq!(c3, resistance_matrix(&Graph::cycle(3).unwrap()).unwrap());
        assert!((0..3).all(|p| c3.get(p, p) == &q(0, 1)));
    }

    #[test]
    fn square_from_path() {
        let p4 = resistance_matrix(&Graph::path(4).unwrap()).unwrap();
        assert_eq!(
            deletion_update(&p4, 0, 3).unwrap(),
            resistance_matrix(&Graph::cycle(4).unwrap()).unwrap()
        );
    }

    #[test]
    fn floats_agree() {
        let g = Graph::cycle(6).unwrap();
        let r = crate::resistance::resistance_matrix_f64(&g.delete_edge(0, 5).unwrap()).unwrap();
        let direct = crate::resistance::resistance_matrix_f64(&g).unwrap();
        let upd = deletion_update(&r, 0, 5).unwrap();
        for (a, b) in upd.as_slice().iter().zip(direct.as_slice()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn argument_errors() {
        let p3: Matrix<ExactNumber> = resistance_matrix(&Graph::path(3).unwrap()).unwrap();
        assert_eq!(deletion_update(&p3, 1, 1), Err(EngineError::SameEndpoints(1)));
        assert!(matches!(
            deletion_update(&p3, 0, 3),
            Err(EngineError::VertexOutOfRange { .. })
        ));
        let rect = Matrix::from_vec(2, 3, vec![q(0, 1); 6]).unwrap();
        assert!(matches!(
            deletion_update(&rect, 0, 1),
            Err(EngineError::BadMatrix { .. })
        ));
    }
}
