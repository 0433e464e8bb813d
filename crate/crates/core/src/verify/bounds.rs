//! Extremal bound checks: a per-graph value compared against a closed-form
//! bound, with the equality cases restricted to cycles or complete graphs.

use std::cmp::Ordering;

use crate::graph::Graph;
use crate::numerics::ExactNumber;

use super::record::{RunnerUp, VerificationRecord};
use super::sweep::{screen, spread, Accumulator, ExactEval, Population, SCREEN_TOLERANCE, TIE_TOLERANCE};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Bound {
    /// max_u Ecc(u) <= (n^2-1)/6 over 2-connected graphs, equality iff C_n.
    EccentricityUpper,
    /// K >= 6/(n^2-1) over resistance-regular graphs, equality iff C_n.
    CurvatureLower,
    /// K <= n/(2n-2) over resistance-regular graphs, equality iff K_n.
    CurvatureUpper,
    /// Kf <= (n^3-n)/12 over 2-connected graphs, equality iff C_n.
    KirchhoffUpper,
    /// Kf >= n-1 over connected graphs, equality iff K_n.
    KirchhoffLower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Members {
    Connected,
    TwoConnected,
    Regular,
}

impl Bound {
    pub fn id(self) -> &'static str {
        match self {
            Bound::EccentricityUpper => "eccentricity-bound",
            Bound::CurvatureLower => "curvature-lower",
            Bound::CurvatureUpper => "curvature-upper",
            Bound::KirchhoffUpper => "kirchhoff-upper",
            Bound::KirchhoffLower => "kirchhoff-lower",
        }
    }

    fn members(self) -> Members {
        match self {
            Bound::EccentricityUpper | Bound::KirchhoffUpper => Members::TwoConnected,
            Bound::CurvatureLower | Bound::CurvatureUpper => Members::Regular,
            Bound::KirchhoffLower => Members::Connected,
        }
    }

    /// True when the bound is an upper bound (extremal value is a maximum).
    fn is_upper(self) -> bool {
        matches!(
            self,
            Bound::EccentricityUpper | Bound::CurvatureUpper | Bound::KirchhoffUpper
        )
    }

    pub fn bound(self, n: usize) -> ExactNumber {
        let n = n as i64;
        match self {
            Bound::EccentricityUpper => ExactNumber::new(n * n - 1, 6),
            Bound::CurvatureLower => ExactNumber::new(6, n * n - 1),
            Bound::CurvatureUpper => ExactNumber::new(n, 2 * n - 2),
            Bound::KirchhoffUpper => ExactNumber::new(n * n * n - n, 12),
            Bound::KirchhoffLower => ExactNumber::from(n - 1),
        }
    }

    fn equality_class(self, g: &Graph) -> bool {
        match self {
            Bound::EccentricityUpper | Bound::CurvatureLower | Bound::KirchhoffUpper => g.is_cycle(),
            Bound::CurvatureUpper | Bound::KirchhoffLower => g.is_complete(),
        }
    }

    fn float_value(self, ecc: &[f64]) -> f64 {
        match self {
            Bound::EccentricityUpper => ecc.iter().copied().fold(f64::NEG_INFINITY, f64::max),
            Bound::CurvatureLower | Bound::CurvatureUpper => 1.0 / ecc[0],
            Bound::KirchhoffUpper | Bound::KirchhoffLower => ecc.iter().sum::<f64>() / 2.0,
        }
    }

    fn exact_value(self, ev: &ExactEval) -> ExactNumber {
        match self {
            Bound::EccentricityUpper => ev.ecc.iter().max().expect("n >= 1").clone(),
            Bound::CurvatureLower | Bound::CurvatureUpper => ev.ecc[0].recip(),
            Bound::KirchhoffUpper | Bound::KirchhoffLower => ev.kf.clone(),
        }
    }

    /// The value a witness must reproduce when re-analysed on its own.
    pub fn value_of(self, g: &Graph) -> Option<ExactNumber> {
        ExactEval::new(g).ok().map(|ev| self.exact_value(&ev))
    }

    /// Extra conditions beyond the main bound; `false` marks a violation.
    fn side_conditions(self, n: usize, ev: &ExactEval, value: &ExactNumber, bound: &ExactNumber) -> bool {
        let n_ = n as i64;
        match self {
            Bound::EccentricityUpper => {
                // attaining the bound at one vertex means attaining it at all
                value != bound || ev.ecc.iter().all(|e| e == bound)
            }
            Bound::CurvatureLower | Bound::CurvatureUpper => {
                let coarse = ExactNumber::new(1, n_ * (n_ - 1));
                let kf_lo = Bound::KirchhoffLower.bound(n);
                let kf_hi = Bound::KirchhoffUpper.bound(n);
                value > &coarse && ev.kf >= kf_lo && ev.kf <= kf_hi
            }
            Bound::KirchhoffUpper | Bound::KirchhoffLower => true,
        }
    }
}

#[derive(Debug, Clone)]
struct Candidate {
    approx: f64,
    exact: Option<ExactNumber>,
    graph: Graph,
}

impl Candidate {
    fn resolve(&self, bound: Bound) -> ExactNumber {
        match &self.exact {
            Some(v) => v.clone(),
            None => bound.value_of(&self.graph).expect("population graphs are connected"),
        }
    }
}

pub(crate) struct BoundAcc {
    bound: Bound,
    n: usize,
    exact_only: bool,
    bound_value: ExactNumber,
    bound_f: f64,
    population: u64,
    violations: Vec<String>,
    witnesses: Vec<String>,
    best: Option<Candidate>,
    runner: Option<Candidate>,
}

impl BoundAcc {
    pub fn new(bound: Bound, n: usize, exact_only: bool) -> Self {
        let bound_value = bound.bound(n);
        Self {
            bound,
            n,
            exact_only,
            bound_f: bound_value.to_f64(),
            bound_value,
            population: 0,
            violations: Vec::new(),
            witnesses: Vec::new(),
            best: None,
            runner: None,
        }
    }

    /// Orientation so that "greater" means "more extreme".
    fn oriented(&self, o: Ordering) -> Ordering {
        if self.bound.is_upper() {
            o
        } else {
            o.reverse()
        }
    }

    fn more_extreme(&self, a: &Candidate, b: &Candidate) -> bool {
        let o = match (&a.exact, &b.exact) {
            (Some(x), Some(y)) => x.cmp(y),
            _ if (a.approx - b.approx).abs() <= TIE_TOLERANCE * b.approx.abs().max(1.0) => Ordering::Equal,
            _ => a.approx.total_cmp(&b.approx),
        };
        self.oriented(o) == Ordering::Greater
    }

    fn offer(slot: &mut Option<Candidate>, c: Candidate, better: impl Fn(&Candidate, &Candidate) -> bool) {
        match slot {
            Some(cur) if !better(&c, cur) => {}
            _ => *slot = Some(c),
        }
    }

    fn offer_best(&mut self, c: Candidate) {
        let mut slot = self.best.take();
        Self::offer(&mut slot, c, |a, b| self.more_extreme(a, b));
        self.best = slot;
    }

    fn offer_runner(&mut self, c: Candidate) {
        let mut slot = self.runner.take();
        Self::offer(&mut slot, c, |a, b| self.more_extreme(a, b));
        self.runner = slot;
    }

    /// Signed distance of `approx` inside the bound (negative when beyond it).
    fn slack(&self, approx: f64) -> f64 {
        if self.bound.is_upper() {
            self.bound_f - approx
        } else {
            approx - self.bound_f
        }
    }

    fn violation(&mut self, g: &Graph, why: &str) {
        let s = g.to_graph6();
        log::warn!("{} n={}: violation {s}: {why}", self.bound.id(), self.n);
        self.violations.push(s);
    }

    pub fn finish(mut self, pop: &Population<'_>, elapsed: f64) -> VerificationRecord {
        self.violations.sort();
        self.violations.dedup();
        let extremal_value = match &self.best {
            Some(c) => c.resolve(self.bound),
            None => self.bound_value.clone(),
        };
        let runner_up = self.runner.as_ref().map(|c| RunnerUp {
            value: c.resolve(self.bound),
            witness: c.graph.to_graph6(),
        });
        VerificationRecord {
            theorem_id: self.bound.id().to_string(),
            n: self.n,
            population: self.population,
            population_source: pop.source(),
            violations: self.violations,
            equality_witnesses: self.witnesses,
            extremal_value,
            elapsed_seconds: elapsed,
            runner_up,
        }
    }
}

impl Accumulator for BoundAcc {
    fn visit(&mut self, g: &Graph) {
        if g.n() != self.n {
            return;
        }
        let member = match self.bound.members() {
            Members::TwoConnected => g.is_two_connected(),
            Members::Connected | Members::Regular => g.is_connected(),
        };
        if !member {
            return;
        }
        let approx_ecc = if self.exact_only { None } else { screen(g) };
        let mut exact: Option<ExactEval> = None;
        if self.bound.members() == Members::Regular {
            if approx_ecc.as_deref().is_some_and(|e| spread(e) > SCREEN_TOLERANCE) {
                return;
            }
            let ev = ExactEval::new(g).expect("connected");
            if !ev.is_regular() {
                return;
            }
            exact = Some(ev);
        }
        self.population += 1;

        let approx = approx_ecc.as_deref().map(|e| self.bound.float_value(e));
        let needs_exact = exact.is_some() || approx.is_none_or(|a| self.slack(a) <= SCREEN_TOLERANCE);
        if !needs_exact {
            let approx = approx.expect("screened");
            let c = Candidate {
                approx,
                exact: None,
                graph: g.clone(),
            };
            self.offer_best(c.clone());
            self.offer_runner(c);
            return;
        }

        let ev = match exact {
            Some(ev) => ev,
            None => ExactEval::new(g).expect("connected"),
        };
        let value = self.bound.exact_value(&ev);
        let bound = self.bound_value.clone();
        let beyond = self.oriented(value.cmp(&bound)) == Ordering::Greater;
        if beyond {
            self.violation(g, &format!("value {value} beyond bound {bound}"));
        }
        if !self.bound.side_conditions(self.n, &ev, &value, &bound) {
            self.violation(g, "side condition failed");
        }
        let on_bound = value == bound;
        if on_bound {
            self.witnesses.push(g.to_graph6());
            if !self.bound.equality_class(g) {
                self.violation(g, "attains the bound outside the equality family");
            }
        }
        let c = Candidate {
            approx: value.to_f64(),
            exact: Some(value),
            graph: g.clone(),
        };
        if !on_bound {
            self.offer_runner(c.clone());
        }
        self.offer_best(c);
    }

    fn merge(&mut self, later: Self) {
        self.population += later.population;
        self.violations.extend(later.violations);
        self.witnesses.extend(later.witnesses);
        if let Some(c) = later.best {
            self.offer_best(c);
        }
        if let Some(c) = later.runner {
            self.offer_runner(c);
        }
    }
}
