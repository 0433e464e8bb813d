//! Exhaustive checks of the extremal resistance theorems over labeled graph
//! populations, producing [`VerificationRecord`]s.
//!
//! By default every graph is first evaluated in floating point and only the
//! graphs within [`SCREEN_TOLERANCE`] of a decision boundary are recomputed
//! exactly. With `exact_only` every graph takes the exact path. Equality is
//! always decided on exact rationals.

mod bounds;
mod closed;
mod record;
mod regular;
mod sweep;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::Instant;

use thiserror::Error;

use crate::enumerate::{check_cap, enumeration_cap, EnumerationError};
use crate::graph::{Graph, GraphError};
use crate::numerics::ExactNumber;
use crate::parallel::Execution;
use crate::resistance::EngineError;

use bounds::{Bound, BoundAcc};
use regular::RegularAcc;

pub use closed::verify_closed_forms;
pub use record::{PopulationSource, RunnerUp, VerificationRecord};
pub use sweep::{Population, SCREEN_TOLERANCE};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("theorem checks need n >= 3, got {n}")]
    TooSmall { n: usize },
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Eccentricity,
    TwoConnected,
    Curvature,
    Kirchhoff,
    ClosedForms,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Eccentricity,
        Suite::TwoConnected,
        Suite::Curvature,
        Suite::Kirchhoff,
        Suite::ClosedForms,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Eccentricity => "eccentricity",
            Suite::TwoConnected => "two-connected",
            Suite::Curvature => "curvature",
            Suite::Kirchhoff => "kirchhoff",
            Suite::ClosedForms => "closed-forms",
        }
    }

    fn needs_population(self) -> bool {
        self != Suite::ClosedForms
    }

    /// Parses a suite name; `"all"` expands to every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>, String> {
        if s == "all" {
            Ok(Self::ALL.to_vec())
        } else {
            s.parse().map(|x| vec![x])
        }
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s || x.name().replace('-', "_") == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Skip the float screen and evaluate every graph exactly.
    pub exact_only: bool,
    pub execution: Execution,
    /// Largest `n` that may be enumerated.
    pub cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            exact_only: false,
            execution: Execution::default(),
            cap: enumeration_cap(),
        }
    }
}

impl VerifyOptions {
    pub fn exact() -> Self {
        Self {
            exact_only: true,
            ..Self::default()
        }
    }
}

fn check_population(pop: &Population<'_>, opts: &VerifyOptions) -> Result<(), VerifyError> {
    let n = pop.n();
    if n < 3 {
        return Err(VerifyError::TooSmall { n });
    }
    if let Population::Enumerate(n) = pop {
        check_cap(*n, opts.cap)?;
    }
    Ok(())
}

fn run_bound(bound: Bound, pop: Population<'_>, opts: &VerifyOptions) -> Result<VerificationRecord, VerifyError> {
    check_population(&pop, opts)?;
    let start = Instant::now();
    let n = pop.n();
    let acc = sweep::sweep(pop, opts.execution, || BoundAcc::new(bound, n, opts.exact_only));
    Ok(acc.finish(&pop, start.elapsed().as_secs_f64()))
}

/// Over 2-connected graphs every vertex has `Ecc(u) <= (n^2-1)/6`, with
/// equality exactly on cycles.
pub fn verify_eccentricity_bound(pop: Population<'_>, opts: &VerifyOptions) -> Result<VerificationRecord, VerifyError> {
    run_bound(Bound::EccentricityUpper, pop, opts)
}

/// Every resistance-regular connected graph is 2-connected. Equality
/// witnesses are the resistance-regular graphs found; the extremal value is
/// the largest cut-vertex count among them.
pub fn verify_constant_curvature_two_connected(
    pop: Population<'_>,
    opts: &VerifyOptions,
) -> Result<VerificationRecord, VerifyError> {
    check_population(&pop, opts)?;
    let start = Instant::now();
    let n = pop.n();
    let acc = sweep::sweep(pop, opts.execution, || RegularAcc::new(n, opts.exact_only));
    Ok(acc.finish(&pop, start.elapsed().as_secs_f64()))
}

/// `6/(n^2-1) <= K <= n/(2n-2)` over resistance-regular graphs. Returns the
/// lower-bound record (equality on cycles) then the upper-bound record
/// (equality on complete graphs).
pub fn verify_curvature_sandwich(
    pop: Population<'_>,
    opts: &VerifyOptions,
) -> Result<[VerificationRecord; 2], VerifyError> {
    Ok([
        run_bound(Bound::CurvatureLower, pop, opts)?,
        run_bound(Bound::CurvatureUpper, pop, opts)?,
    ])
}

/// `Kf <= (n^3-n)/12` over 2-connected graphs (equality on cycles), then
/// `Kf >= n-1` over connected graphs (equality on complete graphs).
pub fn verify_kirchhoff_sandwich(
    pop: Population<'_>,
    opts: &VerifyOptions,
) -> Result<[VerificationRecord; 2], VerifyError> {
    Ok([
        run_bound(Bound::KirchhoffUpper, pop, opts)?,
        run_bound(Bound::KirchhoffLower, pop, opts)?,
    ])
}

/// Recomputes the quantity a record's `extremal_value` refers to on a single
/// graph, so that equality witnesses can be checked independently.
pub fn witness_value(theorem_id: &str, g: &Graph) -> Option<ExactNumber> {
    let bound = match theorem_id {
        "eccentricity-bound" => Bound::EccentricityUpper,
        "curvature-lower" => Bound::CurvatureLower,
        "curvature-upper" => Bound::CurvatureUpper,
        "kirchhoff-upper" => Bound::KirchhoffUpper,
        "kirchhoff-lower" => Bound::KirchhoffLower,
        regular::THEOREM_ID => {
            return (regular::is_resistance_regular(g)? && g.n() >= 3)
                .then(|| regular::cut_vertex_count(g).map(|c| ExactNumber::from(c as i64)))
                .flatten();
        }
        _ => return None,
    };
    bound.value_of(g)
}

fn run_one(suite: Suite, pop: Population<'_>, opts: &VerifyOptions) -> Result<Vec<VerificationRecord>, VerifyError> {
    Ok(match suite {
        Suite::Eccentricity => vec![verify_eccentricity_bound(pop, opts)?],
        Suite::TwoConnected => vec![verify_constant_curvature_two_connected(pop, opts)?],
        Suite::Curvature => verify_curvature_sandwich(pop, opts)?.to_vec(),
        Suite::Kirchhoff => verify_kirchhoff_sandwich(pop, opts)?.to_vec(),
        Suite::ClosedForms => vec![verify_closed_forms(pop.n())?],
    })
}

/// Runs `suites` over `n_range` (or over `stream`, grouped by vertex count),
/// handing each record to `sink` as soon as it is complete. Records come out
/// suite-major, then by `n`.
///
/// With a stream the range only bounds the closed-form checks; the stream's
/// own vertex counts decide the rest.
pub fn run_suite_with(
    n_range: RangeInclusive<usize>,
    suites: &[Suite],
    stream: Option<&[Graph]>,
    opts: &VerifyOptions,
    mut sink: impl FnMut(&VerificationRecord),
) -> Result<Vec<VerificationRecord>, VerifyError> {
    let mut suites = suites.to_vec();
    suites.sort();
    suites.dedup();
    if suites.is_empty() {
        return Ok(Vec::new());
    }
    if n_range.is_empty() {
        return Err(VerifyError::TooSmall { n: *n_range.start() });
    }

    let grouped: Option<BTreeMap<usize, Vec<Graph>>> = stream.map(|graphs| {
        let mut by_n: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();
        for g in graphs {
            by_n.entry(g.n()).or_default().push(g.clone());
        }
        log::warn!("graph6 stream supplied: using the stream's vertex counts, n range ignored");
        by_n.retain(|&n, v| {
            if n < 3 {
                log::warn!("ignoring {} streamed graphs with n = {n} < 3", v.len());
            }
            n >= 3
        });
        by_n
    });

    // fail fast on orders we cannot enumerate
    if grouped.is_none() && suites.iter().any(|s| s.needs_population()) {
        for n in n_range.clone() {
            check_population(&Population::Enumerate(n), opts)?;
        }
    }

    let mut records = Vec::new();
    let mut emit = |recs: Vec<VerificationRecord>, records: &mut Vec<VerificationRecord>| {
        for r in recs {
            sink(&r);
            records.push(r);
        }
    };
    for suite in suites {
        if suite == Suite::ClosedForms {
            emit(vec![verify_closed_forms(*n_range.end())?], &mut records);
            continue;
        }
        match &grouped {
            Some(by_n) => {
                for (&n, graphs) in by_n {
                    emit(run_one(suite, Population::Graphs(n, graphs), opts)?, &mut records);
                }
            }
            None => {
                for n in n_range.clone() {
                    emit(run_one(suite, Population::Enumerate(n), opts)?, &mut records);
                }
            }
        }
    }
    Ok(records)
}

pub fn run_suite(
    n_range: RangeInclusive<usize>,
    suites: &[Suite],
    stream: Option<&[Graph]>,
    opts: &VerifyOptions,
) -> Result<Vec<VerificationRecord>, VerifyError> {
    run_suite_with(n_range, suites, stream, opts, |_| {})
}
