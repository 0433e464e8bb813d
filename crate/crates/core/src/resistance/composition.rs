//! Resistance across cut vertices: distances add through a cut vertex and are
//! unchanged inside each side.

use std::collections::VecDeque;

use super::{resistance_matrix, EngineError};
use crate::blocks::block_cut_decomposition;
use crate::graph::{Graph, GraphError};
use crate::numerics::{ExactNumber, Matrix, Scalar};

/// Resistance matrix of `H1` and `H2` glued at one vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct Composition<T> {
    pub matrix: Matrix<T>,
    /// Index in the union of each vertex of `H2`. Vertices of `H1` keep their
    /// indices; `x2` maps onto `x1` and the rest of `H2` follows `H1` in order.
    pub h2_map: Vec<usize>,
}

fn check_square<T>(m: &Matrix<T>) -> Result<(), EngineError> {
    if m.is_square() && m.rows() > 0 {
        Ok(())
    } else {
        Err(EngineError::BadMatrix {
            expected: m.rows(),
            rows: m.rows(),
            cols: m.cols(),
        })
    }
}

/// Glues `H1` (matrix `r1`) and `H2` (matrix `r2`) by identifying `x1` with `x2`.
pub fn compose_across_cut<T: Scalar>(
    r1: &Matrix<T>,
    r2: &Matrix<T>,
    x1: usize,
    x2: usize,
) -> Result<Composition<T>, EngineError> {
    check_square(r1)?;
    check_square(r2)?;
    let (n1, n2) = (r1.rows(), r2.rows());
    if x1 >= n1 {
        return Err(EngineError::VertexOutOfRange { vertex: x1, n: n1 });
    }
    if x2 >= n2 {
        return Err(EngineError::VertexOutOfRange { vertex: x2, n: n2 });
    }
    let h2_map: Vec<usize> = (0..n2)
        .map(|k| match k.cmp(&x2) {
            std::cmp::Ordering::Equal => x1,
            std::cmp::Ordering::Less => n1 + k,
            std::cmp::Ordering::Greater => n1 + k - 1,
        })
        .collect();
    let n = n1 + n2 - 1;
    // origin of each union vertex: Ok(index in H1) or Err(index in H2)
    let mut origin: Vec<Result<usize, usize>> = (0..n1).map(Ok).collect();
    origin.extend((0..n2).filter(|&k| k != x2).map(Err));

    let matrix = Matrix::from_fn(n, n, |a, b| match (origin[a], origin[b]) {
        (Ok(u), Ok(v)) => r1.get(u, v).clone(),
        (Err(u), Err(v)) => r2.get(u, v).clone(),
        (Ok(u), Err(v)) | (Err(v), Ok(u)) => r1.get(u, x1).clone() + r2.get(x2, v).clone(),
    });
    Ok(Composition { matrix, h2_map })
}

/// Exact resistance matrix assembled block by block over the block-cut tree.
pub fn block_accelerated_resistance(g: &Graph) -> Result<Matrix<ExactNumber>, EngineError> {
    let dec = block_cut_decomposition(g).map_err(|e| match e {
        GraphError::Disconnected => EngineError::Disconnected,
        other => EngineError::Graph(other),
    })?;
    if dec.blocks.len() == 1 {
        return resistance_matrix(g);
    }

    let n = g.n();
    let mut blocks_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (b, vs) in dec.blocks.iter().enumerate() {
        for &v in vs {
            blocks_of[v].push(b);
        }
    }

    let block_matrix =
        |b: usize| -> Result<Matrix<ExactNumber>, EngineError> { resistance_matrix(&g.induced(&dec.blocks[b])?) };

    // union index -> original vertex, and the reverse
    let mut placed: Vec<usize> = dec.blocks[0].clone();
    let mut pos: Vec<Option<usize>> = vec![None; n];
    for (k, &v) in placed.iter().enumerate() {
        pos[v] = Some(k);
    }
    let mut acc = block_matrix(0)?;
    let mut seen = vec![false; dec.blocks.len()];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);

    while let Some(b) = queue.pop_front() {
        for &x in &dec.blocks[b] {
            for &next in &blocks_of[x] {
                if seen[next] {
                    continue;
                }
                seen[next] = true;
                let vs = &dec.blocks[next];
                let x2 = vs.iter().position(|&v| v == x).expect("cut vertex lies in the block");
                let comp = compose_across_cut(&acc, &block_matrix(next)?, pos[x].expect("placed"), x2)?;
                for (k, &v) in vs.iter().enumerate() {
                    if k != x2 {
                        debug_assert!(pos[v].is_none());
                        pos[v] = Some(comp.h2_map[k]);
                        placed.push(v);
                    }
                }
                acc = comp.matrix;
                queue.push_back(next);
            }
        }
    }
    debug_assert_eq!(placed.len(), n);
    let pos: Vec<usize> = pos.into_iter().map(|p| p.expect("every vertex placed")).collect();
    Ok(Matrix::from_fn(n, n, |u, v| acc.get(pos[u], pos[v]).clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::q;

    fn bowtie() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    #[test]
    fn two_edges_make_a_path() {
        let k2 = resistance_matrix(&Graph::complete(2).unwrap()).unwrap();
        let c = compose_across_cut(&k2, &k2, 1, 0).unwrap();
        assert_eq!(c.matrix, resistance_matrix(&Graph::path(3).unwrap()).unwrap());
        assert_eq!(c.h2_map, vec![1, 2]);
    }

    #[test]
    fn bowtie_far_pair() {
        let k3 = resistance_matrix(&Graph::complete(3).unwrap()).unwrap();
        let c = compose_across_cut(&k3, &k3, 2, 0).unwrap();
        assert_eq!(c.matrix.get(0, 4), &q(4, 3));
        // union order 0,1,2 | 3,4 matches the labelled bowtie
        assert_eq!(c.matrix, resistance_matrix(&bowtie()).unwrap());
    }

    #[test]
    fn h1_entries_to_cut_unchanged() {
        let r1 = resistance_matrix(&Graph::cycle(5).unwrap()).unwrap();
        let r2 = resistance_matrix(&Graph::star(4).unwrap()).unwrap();
        let c = compose_across_cut(&r1, &r2, 3, 2).unwrap();
        for u in 0..5 {
            assert_eq!(c.matrix.get(u, 3), r1.get(u, 3));
        }
        assert_eq!(c.h2_map, vec![5, 6, 3, 7]);
    }

    #[test]
    fn index_errors() {
        let k2 = resistance_matrix(&Graph::complete(2).unwrap()).unwrap();
        assert!(matches!(
            compose_across_cut(&k2, &k2, 2, 0),
            Err(EngineError::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            compose_across_cut(&k2, &k2, 0, 5),
            Err(EngineError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn accelerated_examples() {
        let p5 = block_accelerated_resistance(&Graph::path(5).unwrap()).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(p5.get(i, j), &ExactNumber::from(i.abs_diff(j) as i64));
            }
        }
        assert_eq!(
            block_accelerated_resistance(&bowtie()).unwrap(),
            resistance_matrix(&bowtie()).unwrap()
        );
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(
            block_accelerated_resistance(&c6).unwrap(),
            resistance_matrix(&c6).unwrap()
        );
        assert_eq!(
            block_accelerated_resistance(&Graph::empty(3).unwrap()),
            Err(EngineError::Disconnected)
        );
    }

    #[test]
    fn accelerated_with_shuffled_labels() {
        // triangle {1,4,6} - bridge 6-0 - square {0,2,5,3}, plus pendant 3-7
        let g = Graph::from_edges(
            8,
            [(1, 4), (4, 6), (6, 1), (6, 0), (0, 2), (2, 5), (5, 3), (3, 0), (3, 7)],
        )
        .unwrap();
        assert_eq!(
            block_accelerated_resistance(&g).unwrap(),
            resistance_matrix(&g).unwrap()
        );
    }
}
