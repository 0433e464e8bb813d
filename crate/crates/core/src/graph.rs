//! Simple undirected graphs over dense vertex indices `0..n`, stored as
//! adjacency bitsets, plus the graph6 and edge-list text formats.

use std::fmt;

use thiserror::Error;

const WORD_BITS: usize = 64;

/// Errors raised while building or editing a [`Graph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph must have at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
}

/// Errors from [`parse_graph6`]. Offsets are byte offsets into the line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("sparse6 input is not supported (byte 0 is ':')")]
    Sparse6,
    #[error("digraph6 input is not supported (byte 0 is '&')")]
    Digraph6,
    #[error("byte {offset}: character {byte:#04x} outside the graph6 range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("byte {offset}: truncated vertex-count header")]
    TruncatedHeader { offset: usize },
    #[error("graph6 string encodes a graph with zero vertices")]
    ZeroVertices,
    #[error("byte {offset}: expected {expected} edge bytes, found {found}")]
    WrongLength {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("byte {offset}: padding bits are not zero")]
    TrailingBits { offset: usize },
}

/// Errors from [`parse_edge_list`]. Line numbers are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("missing vertex-count line")]
    MissingHeader,
    #[error("line {line}: non-numeric token {token:?}")]
    NotANumber { line: usize, token: String },
    #[error("line {line}: expected two vertex indices")]
    BadArity { line: usize },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    OutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("vertex count must be positive")]
    Empty,
}

/// A simple undirected graph.
///
/// Row `i` of the adjacency matrix occupies `words` consecutive `u64`s; for
/// `n <= 64` that is a single machine word per row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let words = n.div_ceil(WORD_BITS);
        Ok(Self {
            n,
            words,
            adj: vec![0; n * words],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for v in 1..n {
            for u in 0..v {
                g.set(u, v);
            }
        }
        Ok(g)
    }

    /// The cycle `0-1-...-(n-1)-0`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::VertexOutOfRange { vertex: 2, n });
        }
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Star with centre `0`.
    pub fn star(n: usize) -> Result<Self, GraphError> {
        Self::from_edges(n, (1..n).map(|i| (0, i)))
    }

    /// Builds a graph from an edge bitmask whose bit `k` is the `k`-th pair in
    /// graph6 order: `(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...`.
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        let mut k = 0;
        for v in 1..n {
            for u in 0..v {
                if k < 64 && mask >> k & 1 == 1 {
                    g.set(u, v);
                }
                k += 1;
            }
        }
        Ok(g)
    }

    /// Inverse of [`Graph::from_edge_mask`]; `None` when the graph has more
    /// than 64 vertex pairs.
    pub fn edge_mask(&self) -> Option<u64> {
        if self.n * (self.n - 1) / 2 > 64 {
            return None;
        }
        let mut mask = 0u64;
        let mut k = 0;
        for v in 1..self.n {
            for u in 0..v {
                if self.has_edge(u, v) {
                    mask |= 1 << k;
                }
                k += 1;
            }
        }
        Some(mask)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|i| self.degree(i)).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.words + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Adjacency row of `u` as raw bitset words.
    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.adj[u * self.words..(u + 1) * self.words]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.row(u))
    }

    /// Edges `(u, v)` with `u < v`, in graph6 order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |v| (0..v).filter(move |&u| self.has_edge(u, v)).map(move |u| (u, v)))
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.set(u, v);
        Ok(())
    }

    /// Returns a copy of the graph without the edge `{u, v}`.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u * g.words + v / WORD_BITS] &= !(1 << (v % WORD_BITS));
        g.adj[v * g.words + u / WORD_BITS] &= !(1 << (u % WORD_BITS));
        Ok(g)
    }

    /// Subgraph induced by `vertices`; vertex `k` of the result is `vertices[k]`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(vertices.len())?;
        for (a, &u) in vertices.iter().enumerate() {
            self.check_vertex(u)?;
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.set(a, b);
                }
            }
        }
        Ok(g)
    }

    /// Vertices reachable from `start` while avoiding `removed`.
    fn reach(&self, start: usize, removed: Option<usize>) -> Vec<u64> {
        let mut seen = vec![0u64; self.words];
        let mut frontier = vec![0u64; self.words];
        set_bit(&mut seen, start);
        set_bit(&mut frontier, start);
        let mut next = vec![0u64; self.words];
        loop {
            next.iter_mut().for_each(|w| *w = 0);
            for u in bits(&frontier) {
                for (n, r) in next.iter_mut().zip(self.row(u)) {
                    *n |= r;
                }
            }
            if let Some(x) = removed {
                clear_bit(&mut next, x);
            }
            let mut grew = false;
            for (n, s) in next.iter_mut().zip(seen.iter_mut()) {
                *n &= !*s;
                *s |= *n;
                grew |= *n != 0;
            }
            if !grew {
                return seen;
            }
            std::mem::swap(&mut frontier, &mut next);
        }
    }

    /// True when every vertex is reachable from vertex 0.
    pub fn is_connected(&self) -> bool {
        count_bits(&self.reach(0, None)) == self.n
    }

    /// Connected, at least three vertices, and no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        (0..self.n).all(|x| {
            let start = if x == 0 { 1 } else { 0 };
            count_bits(&self.reach(start, Some(x))) == self.n - 1
        })
    }

    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && (0..self.n).all(|u| self.degree(u) == 2) && self.is_connected()
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|u| self.degree(u) == self.n - 1)
    }

    pub fn classify(&self) -> Classification {
        Classification {
            is_cycle: self.is_cycle(),
            is_complete: self.is_complete(),
        }
    }

    pub fn to_graph6(&self) -> String {
        encode_graph6(self)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize) {
        self.adj[u * self.words + v / WORD_BITS] |= 1 << (v % WORD_BITS);
        self.adj[v * self.words + u / WORD_BITS] |= 1 << (u % WORD_BITS);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} {:?})", self.to_graph6(), self.edges().collect::<Vec<_>>())
    }
}

/// Result of [`Graph::classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub is_cycle: bool,
    pub is_complete: bool,
}

fn bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD_BITS + b)
            }
        })
    })
}

fn set_bit(words: &mut [u64], i: usize) {
    words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
}

fn clear_bit(words: &mut [u64], i: usize) {
    words[i / WORD_BITS] &= !(1 << (i % WORD_BITS));
}

fn count_bits(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

/// Encodes `g` in graph6: the vertex count `N(n)` followed by the upper
/// triangle in column-major order, six bits per byte, each byte offset by 63.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n;
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses one graph6 line. An optional `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let line = text.trim_end_matches(['\n', '\r', ' ', '\t']);
    let (base, line) = match line.strip_prefix(">>graph6<<") {
        Some(rest) => (10, rest),
        None => (0, line),
    };
    let bytes = line.as_bytes();
    match bytes.first() {
        None => return Err(Graph6Error::Empty),
        Some(b':') => return Err(Graph6Error::Sparse6),
        Some(b'&') => return Err(Graph6Error::Digraph6),
        _ => {}
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::BadByte {
            offset: base + pos,
            byte: bytes[pos],
        });
    }

    let take = |from: usize, len: usize| -> Result<usize, Graph6Error> {
        let chunk = bytes.get(from..from + len).ok_or(Graph6Error::TruncatedHeader {
            offset: base + bytes.len(),
        })?;
        Ok(chunk.iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize))
    };
    let (n, body_start) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        (take(1, 3)?, 4)
    } else {
        (take(2, 6)?, 8)
    };
    if n == 0 {
        return Err(Graph6Error::ZeroVertices);
    }

    let pairs = n * (n - 1) / 2;
    let expected = pairs.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() != expected {
        return Err(Graph6Error::WrongLength {
            offset: base + body_start,
            expected,
            found: body.len(),
        });
    }
    let pad = expected * 6 - pairs;
    if pad > 0 {
        let last = body[expected - 1] - 63;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::TrailingBits {
                offset: base + body_start + expected - 1,
            });
        }
    }

    let mut g = Graph::empty(n).map_err(|_| Graph6Error::ZeroVertices)?;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set(u, v);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Parses the edge-list format: a first line holding `n`, then one
/// `u v` pair per non-empty line. Duplicate edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let n = parse_index(header, hline)?;
    let mut g = Graph::empty(n).map_err(|_| EdgeListError::Empty)?;
    for (line, text) in lines {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let [a, b] = tokens[..] else {
            return Err(EdgeListError::BadArity { line });
        };
        let (u, v) = (parse_index(a, line)?, parse_index(b, line)?);
        for vertex in [u, v] {
            if vertex >= n {
                return Err(EdgeListError::OutOfRange { line, vertex, n });
            }
        }
        if u == v {
            return Err(EdgeListError::SelfLoop { line, vertex: u });
        }
        g.set(u, v);
    }
    Ok(g)
}

fn parse_index(token: &str, line: usize) -> Result<usize, EdgeListError> {
    token.parse().map_err(|_| EdgeListError::NotANumber {
        line,
        token: token.to_string(),
    })
}

/// Renders `g` in the edge-list format accepted by [`parse_edge_list`].
pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n);
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
