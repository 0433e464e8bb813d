//! Population sweeps: chunked over edge masks or over a list of graphs, with
//! per-chunk accumulators merged in chunk order.

use crate::enumerate::{graphs_in_range, mask_count, GraphFilter};
use crate::graph::Graph;
use crate::numerics::ExactNumber;
use crate::parallel::{map_chunks, map_items, Execution};
use crate::resistance::{eccentricities_f64, EngineError, GroundedInverse};

use super::record::PopulationSource;

/// Graphs within this distance of a decision boundary are recomputed exactly.
pub const SCREEN_TOLERANCE: f64 = 1e-6;

/// Float ties closer than this keep the earlier graph.
pub(crate) const TIE_TOLERANCE: f64 = 1e-12;

const MASK_CHUNK: u64 = 1 << 14;
const GRAPH_CHUNK: usize = 4096;

#[derive(Debug, Clone, Copy)]
pub enum Population<'a> {
    /// All labeled graphs on `n` vertices.
    Enumerate(usize),
    /// Graphs from an external source, all on the same `n`.
    Graphs(usize, &'a [Graph]),
}

impl Population<'_> {
    pub fn n(&self) -> usize {
        match *self {
            Population::Enumerate(n) | Population::Graphs(n, _) => n,
        }
    }

    pub fn source(&self) -> PopulationSource {
        match self {
            Population::Enumerate(_) => PopulationSource::Enumeration,
            Population::Graphs(..) => PopulationSource::Stream,
        }
    }
}

pub(crate) trait Accumulator: Send {
    fn visit(&mut self, g: &Graph);
    /// Appends `later`, which covers graphs after those seen by `self`.
    fn merge(&mut self, later: Self);
}

pub(crate) fn sweep<A, I>(pop: Population<'_>, exec: Execution, init: I) -> A
where
    A: Accumulator,
    I: Fn() -> A + Sync + Send,
{
    let parts = match pop {
        Population::Enumerate(n) => map_chunks(exec, mask_count(n), MASK_CHUNK, |range| {
            let mut acc = init();
            for (_, g) in graphs_in_range(n, range, GraphFilter::any()) {
                acc.visit(&g);
            }
            acc
        }),
        Population::Graphs(_, graphs) => {
            let chunks: Vec<&[Graph]> = graphs.chunks(GRAPH_CHUNK).collect();
            map_items(exec, &chunks, |chunk| {
                let mut acc = init();
                for g in chunk.iter() {
                    acc.visit(g);
                }
                acc
            })
        }
    };
    let mut parts = parts.into_iter();
    let mut acc = parts.next().unwrap_or_else(&init);
    for p in parts {
        acc.merge(p);
    }
    acc
}

/// Exact per-graph quantities used by the bound checks.
#[derive(Debug, Clone)]
pub(crate) struct ExactEval {
    pub ecc: Vec<ExactNumber>,
    pub kf: ExactNumber,
}

impl ExactEval {
    pub fn new(g: &Graph) -> Result<Self, EngineError> {
        let inv = GroundedInverse::new(g, 0)?;
        Ok(Self {
            ecc: inv.eccentricities(),
            kf: inv.kirchhoff(),
        })
    }

    pub fn is_regular(&self) -> bool {
        self.ecc.iter().all(|e| e == &self.ecc[0])
    }
}

/// Float eccentricities, or `None` when the float solve fails and the graph
/// must go straight to the exact path.
pub(crate) fn screen(g: &Graph) -> Option<Vec<f64>> {
    eccentricities_f64(g).ok().filter(|e| e.iter().all(|x| x.is_finite()))
}

pub(crate) fn spread(values: &[f64]) -> f64 {
    let (lo, hi) = values.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
        (lo.min(v), hi.max(v))
    });
    hi - lo
}
