//! Resistance-regular graphs on `n >= 3` vertices have no cut vertex.

use crate::blocks::block_cut_decomposition;
use crate::graph::Graph;
use crate::numerics::ExactNumber;

use super::record::VerificationRecord;
use super::sweep::{screen, spread, Accumulator, ExactEval, Population, SCREEN_TOLERANCE};

pub(crate) const THEOREM_ID: &str = "constant-curvature-two-connected";

/// Number of cut vertices; the extremal value of this check is its maximum
/// over resistance-regular graphs, which must be zero.
pub(crate) fn cut_vertex_count(g: &Graph) -> Option<usize> {
    block_cut_decomposition(g).ok().map(|d| d.cut_vertices.len())
}

pub(crate) fn is_resistance_regular(g: &Graph) -> Option<bool> {
    ExactEval::new(g).ok().map(|ev| ev.is_regular())
}

pub(crate) struct RegularAcc {
    n: usize,
    exact_only: bool,
    population: u64,
    violations: Vec<String>,
    witnesses: Vec<String>,
    max_cuts: usize,
}

impl RegularAcc {
    pub fn new(n: usize, exact_only: bool) -> Self {
        Self {
            n,
            exact_only,
            population: 0,
            violations: Vec::new(),
            witnesses: Vec::new(),
            max_cuts: 0,
        }
    }

    pub fn finish(mut self, pop: &Population<'_>, elapsed: f64) -> VerificationRecord {
        self.violations.sort();
        self.violations.dedup();
        VerificationRecord {
            theorem_id: THEOREM_ID.to_string(),
            n: self.n,
            population: self.population,
            population_source: pop.source(),
            violations: self.violations,
            equality_witnesses: self.witnesses,
            extremal_value: ExactNumber::from(self.max_cuts as i64),
            elapsed_seconds: elapsed,
            runner_up: None,
        }
    }
}

impl Accumulator for RegularAcc {
    fn visit(&mut self, g: &Graph) {
        if g.n() != self.n || !g.is_connected() {
            return;
        }
        self.population += 1;
        if !self.exact_only && screen(g).is_some_and(|e| spread(&e) > SCREEN_TOLERANCE) {
            return;
        }
        if !ExactEval::new(g).expect("connected").is_regular() {
            return;
        }
        let s = g.to_graph6();
        let cuts = cut_vertex_count(g).expect("connected");
        self.max_cuts = self.max_cuts.max(cuts);
        if cuts > 0 || !g.is_two_connected() {
            log::warn!(
                "{THEOREM_ID} n={}: resistance-regular graph {s} has {cuts} cut vertices",
                self.n
            );
            self.violations.push(s.clone());
        }
        self.witnesses.push(s);
    }

    fn merge(&mut self, later: Self) {
        self.population += later.population;
        self.violations.extend(later.violations);
        self.witnesses.extend(later.witnesses);
        self.max_cuts = self.max_cuts.max(later.max_cuts);
    }
}
