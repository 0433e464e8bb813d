//! Independent oracles shared by the integration suites. Nothing here calls
//! into the solver or resistance code it is used to check.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use ohmcurve::graph::Graph;
use ohmcurve::numerics::{ExactNumber, Matrix};

/// Plain rational Gauss-Jordan inversion.
pub fn gauss_jordan_inverse(a: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(p, c);
        let piv = m[c][c].clone();
        for x in m[c].iter_mut() {
            *x = &*x / &piv;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                let pivot_row = m[c].clone();
                for (x, p) in m[r].iter_mut().zip(&pivot_row) {
                    *x -= p * &f;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Resistance matrix through the Moore-Penrose pseudo-inverse
/// `L+ = (L + J/n)^{-1} - J/n`, with no grounding vertex.
pub fn oracle_resistance(g: &Graph) -> Matrix<ExactNumber> {
    let n = g.n();
    let jn = BigRational::new(BigInt::one(), BigInt::from(n));
    let a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let l = if i == j {
                        rat(g.degree(i) as i64)
                    } else if g.has_edge(i, j) {
                        rat(-1)
                    } else {
                        rat(0)
                    };
                    l + &jn
                })
                .collect()
        })
        .collect();
    let inv = gauss_jordan_inverse(&a).expect("connected graph");
    let lp = |i: usize, j: usize| &inv[i][j] - &jn;
    Matrix::from_fn(n, n, |i, j| ExactNumber::from(lp(i, i) + lp(j, j) - lp(i, j) * rat(2)))
}

/// Connectivity by union-find over the edge mask.
pub fn union_find_connected(n: usize, mask: u64) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if mask >> k & 1 == 1 {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                parent[a] = b;
            }
            k += 1;
        }
    }
    let root = find(&mut parent, 0);
    (0..n).all(|v| find(&mut parent, v) == root)
}

/// Hop distances from `s` by breadth-first search.
pub fn bfs_distances(g: &Graph, s: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[s] = 0;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for v in 0..g.n() {
            if g.has_edge(u, v) && dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// The labeled tree with the given Prüfer sequence (length `n - 2`).
pub fn prufer_tree(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::new();
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges).unwrap()
}

/// Every labeled tree on `n >= 2` vertices.
pub fn all_trees(n: usize) -> Vec<Graph> {
    if n == 2 {
        return vec![Graph::complete(2).unwrap()];
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total)
        .map(|mut code| {
            let seq: Vec<usize> = (0..len)
                .map(|_| {
                    let d = code % n;
                    code /= n;
                    d
                })
                .collect();
            prufer_tree(n, &seq)
        })
        .collect()
}

/// Every labeled cycle on `n` vertices as an edge mask, built from vertex
/// orderings that start at 0 with the second vertex below the last.
pub fn labeled_cycle_masks(n: usize) -> std::collections::BTreeSet<u64> {
    fn pair_index(u: usize, v: usize) -> usize {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        v * (v - 1) / 2 + u
    }
    let mut out = std::collections::BTreeSet::new();
    let mut rest: Vec<usize> = (1..n).collect();
    permute(&mut rest, 0, &mut |perm| {
        if perm[0] < perm[perm.len() - 1] {
            let mut order = vec![0];
            order.extend_from_slice(perm);
            let mask = (0..n).fold(0u64, |m, i| m | 1 << pair_index(order[i], order[(i + 1) % n]));
            out.insert(mask);
        }
    });
    out
}

fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}

/// graph6 written out bit by bit straight from the format description
/// (n <= 62 only).
pub fn graph6_by_hand(n: usize, edges: &[(usize, usize)]) -> String {
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(edges.contains(&(i, j)) || edges.contains(&(j, i)));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut s = String::new();
    s.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| acc << 1 | b as u8);
        s.push((v + 63) as char);
    }
    s
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}
