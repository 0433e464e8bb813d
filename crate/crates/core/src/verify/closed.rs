use std::time::Instant;

use crate::graph::Graph;
use crate::numerics::ExactNumber;
use crate::resistance::{analyze, complete_closed_forms, cycle_closed_forms, ResistanceReport};

use super::record::{PopulationSource, VerificationRecord};
use super::VerifyError;

pub(crate) const THEOREM_ID: &str = "closed-forms";

fn cycle_matches(n: usize, report: &ResistanceReport) -> bool {
    let cf = cycle_closed_forms(n).expect("n >= 3");
    let pairs_ok = (0..n).all(|u| {
        (0..n).all(|v| {
            let d = u.abs_diff(v).min(n - u.abs_diff(v));
            cf.pair_resistance(d).is_ok_and(|r| report.r.get(u, v) == &r)
        })
    });
    pairs_ok
        && report.ecc.iter().all(|e| e == &cf.ecc)
        && report.kf == cf.kf
        && report.constant_curvature.as_ref() == Some(&cf.kappa)
}

fn complete_matches(n: usize, report: &ResistanceReport) -> bool {
    let cf = complete_closed_forms(n).expect("n >= 2");
    let pairs_ok = (0..n).all(|u| (0..n).all(|v| u == v || report.r.get(u, v) == &cf.pair_resistance));
    pairs_ok && report.kf == cf.kf && report.constant_curvature.as_ref() == Some(&cf.kappa)
}

/// Checks `analyze(C_n)` and `analyze(K_n)` against their closed forms for
/// `3 <= n <= n_max`. The extremal value is the curvature of `C_{n_max}`.
pub fn verify_closed_forms(n_max: usize) -> Result<VerificationRecord, VerifyError> {
    if n_max < 3 {
        return Err(VerifyError::TooSmall { n: n_max });
    }
    let start = Instant::now();
    let mut violations = Vec::new();
    let mut population = 0;
    let mut extremal = ExactNumber::from(0);
    for n in 3..=n_max {
        let cycle = Graph::cycle(n)?;
        let report = analyze(&cycle)?;
        if !cycle_matches(n, &report) {
            violations.push(cycle.to_graph6());
        }
        extremal = report.constant_curvature.clone().unwrap_or_default();
        let complete = Graph::complete(n)?;
        if !complete_matches(n, &analyze(&complete)?) {
            violations.push(complete.to_graph6());
        }
        population += 2;
    }
    violations.sort();
    Ok(VerificationRecord {
        theorem_id: THEOREM_ID.to_string(),
        n: n_max,
        population,
        population_source: PopulationSource::Constructed,
        violations,
        equality_witnesses: Vec::new(),
        extremal_value: extremal,
        elapsed_seconds: start.elapsed().as_secs_f64(),
        runner_up: None,
    })
}
