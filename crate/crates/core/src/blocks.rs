//! Blocks and cut vertices via an iterative depth-first low-link traversal.

use crate::graph::{Graph, GraphError};

/// Blocks (maximal pieces without a cut vertex, bridges included) and cut
/// vertices of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Sorted ascending.
    pub cut_vertices: Vec<usize>,
    /// Each block's vertices sorted ascending; blocks sorted by their vertex lists.
    pub blocks: Vec<Vec<usize>>,
}

impl BlockDecomposition {
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }
}

/// Decomposes a connected graph into blocks. Runs in `O(n + m)`.
///
/// A single vertex forms one block with no cut vertices.
pub fn block_cut_decomposition(g: &Graph) -> Result<BlockDecomposition, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let n = g.n();
    if n == 1 {
        return Ok(BlockDecomposition {
            cut_vertices: Vec::new(),
            blocks: vec![vec![0]],
        });
    }

    let adj: Vec<Vec<usize>> = (0..n).map(|u| g.neighbors(u).collect()).collect();
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();
    let mut timer = 0;

    // frame: (vertex, parent, next neighbour position)
    let mut stack: Vec<(usize, usize, usize)> = vec![(0, UNSEEN, 0)];
    disc[0] = 0;
    low[0] = 0;
    timer += 1;
    let mut root_children = 0;

    while let Some(frame) = stack.last_mut() {
        let (u, parent, pos) = *frame;
        if pos < adj[u].len() {
            frame.2 += 1;
            let w = adj[u][pos];
            if disc[w] == UNSEEN {
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                edge_stack.push((u, w));
                if u == 0 {
                    root_children += 1;
                }
                stack.push((w, u, 0));
            } else if w != parent && disc[w] < disc[u] {
                edge_stack.push((u, w));
                low[u] = low[u].min(disc[w]);
            }
            continue;
        }
        stack.pop();
        if parent == UNSEEN {
            continue;
        }
        low[parent] = low[parent].min(low[u]);
        if low[u] >= disc[parent] {
            if parent != 0 {
                is_cut[parent] = true;
            }
            let mut block = Vec::new();
            while let Some((a, b)) = edge_stack.pop() {
                block.push(a);
                block.push(b);
                if (a, b) == (parent, u) {
                    break;
                }
            }
            block.sort_unstable();
            block.dedup();
            blocks.push(block);
        }
    }
    if root_children >= 2 {
        is_cut[0] = true;
    }

    blocks.sort();
    Ok(BlockDecomposition {
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
        blocks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bowtie() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let d = block_cut_decomposition(&g).unwrap();
        assert_eq!(d.cut_vertices, vec![2]);
        assert_eq!(d.blocks, vec![vec![0, 1, 2], vec![2, 3, 4]]);
    }

    #[test]
    fn cycle_is_one_block() {
        let d = block_cut_decomposition(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(d.blocks.len(), 1);
        assert!(d.cut_vertices.is_empty());
    }

    #[test]
    fn path_blocks_are_edges() {
        let d = block_cut_decomposition(&Graph::path(4).unwrap()).unwrap();
        assert_eq!(d.blocks, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(d.cut_vertices, vec![1, 2]);
    }

    #[test]
    fn star_centre_and_root_cut() {
        let d = block_cut_decomposition(&Graph::star(4).unwrap()).unwrap();
        assert_eq!(d.cut_vertices, vec![0]);
        assert_eq!(d.blocks.len(), 3);
    }

    #[test]
    fn trivial_and_disconnected() {
        let d = block_cut_decomposition(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(d.blocks, vec![vec![0]]);
        let d = block_cut_decomposition(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!(d.blocks, vec![vec![0, 1]]);
        assert!(d.cut_vertices.is_empty());
        assert_eq!(
            block_cut_decomposition(&Graph::empty(2).unwrap()),
            Err(GraphError::Disconnected)
        );
    }
}
