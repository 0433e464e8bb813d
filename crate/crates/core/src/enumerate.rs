//! Labeled graph enumeration and graph6 stream ingestion.

use std::fmt;
use std::io::BufRead;
use std::ops::Range;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{parse_graph6, Graph, Graph6Error};

/// Default largest `n` for [`enumerate_labeled`].
pub const DEFAULT_CAP: usize = 8;
/// Environment variable overriding [`DEFAULT_CAP`].
pub const CAP_ENV: &str = "OHMCURVE_CAP";
/// Largest `n` whose vertex pairs fit a 64-bit edge mask.
pub const MASK_LIMIT: usize = 11;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("n = {n} exceeds the enumeration cap {cap}; pipe graph6 from an external generator instead")]
    CapExceeded { n: usize, cap: usize },
    #[error("n must be at least 1")]
    ZeroVertices,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {source}")]
pub struct StreamError {
    pub line: usize,
    #[source]
    pub source: Graph6Error,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Connectivity {
    #[default]
    Any,
    Connected,
    TwoConnected,
}

impl FromStr for Connectivity {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "any" => Ok(Self::Any),
            "connected" => Ok(Self::Connected),
            "two_connected" | "two-connected" => Ok(Self::TwoConnected),
            other => Err(format!("unknown connectivity filter {other:?}")),
        }
    }
}

impl fmt::Display for Connectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Any => "any",
            Self::Connected => "connected",
            Self::TwoConnected => "two_connected",
        })
    }
}

/// Predicate over graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GraphFilter {
    pub connectivity: Connectivity,
    pub min_edges: Option<usize>,
    pub max_edges: Option<usize>,
    pub min_degree: Option<usize>,
    pub max_degree: Option<usize>,
}

impl GraphFilter {
    pub fn any() -> Self {
        Self::default()
    }

    pub fn connected() -> Self {
        Self::with(Connectivity::Connected)
    }

    pub fn two_connected() -> Self {
        Self::with(Connectivity::TwoConnected)
    }

    pub fn with(connectivity: Connectivity) -> Self {
        Self {
            connectivity,
            ..Self::default()
        }
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        let m = g.edge_count();
        if self.min_edges.is_some_and(|k| m < k) || self.max_edges.is_some_and(|k| m > k) {
            return false;
        }
        if self.min_degree.is_some() || self.max_degree.is_some() {
            let (lo, hi) = (0..g.n())
                .map(|u| g.degree(u))
                .fold((usize::MAX, 0), |(lo, hi), d| (lo.min(d), hi.max(d)));
            if self.min_degree.is_some_and(|k| lo < k) || self.max_degree.is_some_and(|k| hi > k) {
                return false;
            }
        }
        match self.connectivity {
            Connectivity::Any => true,
            Connectivity::Connected => g.is_connected(),
            Connectivity::TwoConnected => g.is_two_connected(),
        }
    }
}

/// The enumeration cap, honouring `OHMCURVE_CAP` (clamped to [`MASK_LIMIT`]).
pub fn enumeration_cap() -> usize {
    std::env::var(CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map(|c| c.min(MASK_LIMIT))
        .unwrap_or(DEFAULT_CAP)
}

pub fn check_cap(n: usize, cap: usize) -> Result<(), EnumerationError> {
    if n == 0 {
        return Err(EnumerationError::ZeroVertices);
    }
    if n > cap.min(MASK_LIMIT) {
        return Err(EnumerationError::CapExceeded { n, cap });
    }
    Ok(())
}

/// Number of labeled graphs on `n` vertices, `2^(n(n-1)/2)`.
pub fn mask_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// Iterator over the labeled graphs with edge masks in `masks` that pass `filter`.
pub fn graphs_in_range(n: usize, masks: Range<u64>, filter: GraphFilter) -> impl Iterator<Item = (u64, Graph)> {
    masks.filter_map(move |mask| {
        let g = Graph::from_edge_mask(n, mask).expect("n >= 1");
        filter.accepts(&g).then_some((mask, g))
    })
}

/// Every labeled graph on `n` vertices passing `filter`, in increasing
/// edge-mask order (bit `k` is the `k`-th vertex pair in graph6 order).
pub fn enumerate_labeled(n: usize, filter: GraphFilter) -> Result<impl Iterator<Item = Graph>, EnumerationError> {
    check_cap(n, enumeration_cap())?;
    Ok(graphs_in_range(n, 0..mask_count(n), filter).map(|(_, g)| g))
}

/// Parses graph6 lines from `source`, yielding graphs that pass `filter`.
///
/// Blank lines are ignored. In strict mode the first malformed line is
/// yielded as an error and iteration stops; otherwise malformed lines are
/// logged, recorded in [`Graph6Stream::skipped`], and skipped.
pub fn stream_graph6<R: BufRead>(source: R, filter: GraphFilter, strict: bool) -> Graph6Stream<R> {
    Graph6Stream {
        lines: source.lines(),
        line: 0,
        filter,
        strict,
        done: false,
        skipped: Vec::new(),
    }
}

pub struct Graph6Stream<R> {
    lines: std::io::Lines<R>,
    line: usize,
    filter: GraphFilter,
    strict: bool,
    done: bool,
    skipped: Vec<StreamError>,
}

impl<R> Graph6Stream<R> {
    pub fn skipped(&self) -> &[StreamError] {
        &self.skipped
    }
}

impl<R: BufRead> Iterator for Graph6Stream<R> {
    type Item = Result<Graph, StreamError>;

    fn next(&mut self) -> Option<Self::Item> {
        while !self.done {
            let text = match self.lines.next() {
                None => {
                    self.done = true;
                    return None;
                }
                Some(Err(e)) => {
                    self.done = true;
                    log::error!("read error after line {}: {e}", self.line);
                    return None;
                }
                Some(Ok(t)) => t,
            };
            self.line += 1;
            if text.trim().is_empty() {
                continue;
            }
            match parse_graph6(&text) {
                Ok(g) if self.filter.accepts(&g) => return Some(Ok(g)),
                Ok(_) => {}
                Err(source) => {
                    let err = StreamError {
                        line: self.line,
                        source,
                    };
                    if self.strict {
                        self.done = true;
                        return Some(Err(err));
                    }
                    log::warn!("skipping malformed graph6: {err}");
                    self.skipped.push(err);
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(n: usize, f: GraphFilter) -> usize {
        enumerate_labeled(n, f).unwrap().count()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(3, GraphFilter::connected()), 4);
        assert_eq!(count(4, GraphFilter::connected()), 38);
        assert_eq!(count(1, GraphFilter::any()), 1);
        assert_eq!(count(1, GraphFilter::connected()), 1);
        assert_eq!(count(3, GraphFilter::two_connected()), 1);
        assert_eq!(count(2, GraphFilter::two_connected()), 0);
    }

    #[test]
    fn order_is_increasing_mask() {
        let masks: Vec<u64> = enumerate_labeled(4, GraphFilter::any())
            .unwrap()
            .map(|g| g.edge_mask().unwrap())
            .collect();
        assert_eq!(masks, (0..64).collect::<Vec<_>>());
    }

    #[test]
    fn cap() {
        assert!(matches!(
            check_cap(9, DEFAULT_CAP),
            Err(EnumerationError::CapExceeded { n: 9, cap: 8 })
        ));
        assert_eq!(check_cap(0, DEFAULT_CAP), Err(EnumerationError::ZeroVertices));
        assert!(check_cap(12, 20).is_err());
    }

    #[test]
    fn edge_and_degree_bounds() {
        let f = GraphFilter {
            min_edges: Some(3),
            max_edges: Some(3),
            ..GraphFilter::connected()
        };
        // spanning trees of K4 (16) plus nothing else with 3 edges is connected
        assert_eq!(count(4, f), 16);
        let reg2 = GraphFilter {
            min_degree: Some(2),
            max_degree: Some(2),
            ..GraphFilter::any()
        };
        assert_eq!(count(4, reg2), 3);
    }

    #[test]
    fn streams() {
        let collect = |text: &str, f: GraphFilter| -> Vec<Graph> {
            stream_graph6(text.as_bytes(), f, true).map(Result::unwrap).collect()
        };
        assert_eq!(
            collect("Bw\n", GraphFilter::two_connected()),
            vec![Graph::complete(3).unwrap()]
        );
        assert!(collect("Bg\n", GraphFilter::two_connected()).is_empty());
        assert_eq!(collect("A_\n\nBw\n", GraphFilter::connected()).len(), 2);
    }

    #[test]
    fn malformed_lines() {
        let text = "Bw\nB!\nA_\n";
        let mut strict = stream_graph6(text.as_bytes(), GraphFilter::any(), true);
        assert!(strict.next().unwrap().is_ok());
        let err = strict.next().unwrap().unwrap_err();
        assert_eq!(err.line, 2);
        assert!(strict.next().is_none());

        let mut lenient = stream_graph6(text.as_bytes(), GraphFilter::any(), false);
        let got: Vec<_> = lenient.by_ref().collect::<Result<_, _>>().unwrap();
        assert_eq!(got.len(), 2);
        assert_eq!(lenient.skipped().len(), 1);
        assert_eq!(lenient.skipped()[0].line, 2);
    }

    #[test]
    fn connectivity_names() {
        for c in [Connectivity::Any, Connectivity::Connected, Connectivity::TwoConnected] {
            assert_eq!(c.to_string().parse::<Connectivity>().unwrap(), c);
        }
        assert!("bogus".parse::<Connectivity>().is_err());
    }
}
