use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{EngineError, GroundedInverse};
use crate::graph::Graph;
use crate::numerics::{solve_linear_system, ExactNumber, Matrix};

/// Every resistance quantity of one connected graph, computed exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct ResistanceReport {
    pub r: Matrix<ExactNumber>,
    pub ecc: Vec<ExactNumber>,
    pub kf: ExactNumber,
    pub kappa: Vec<ExactNumber>,
    pub resistance_regular: bool,
    pub constant_curvature: Option<ExactNumber>,
}

/// Serialized form of a [`ResistanceReport`]. Rationals are `"p/q"` strings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportJson {
    pub n: usize,
    pub resistance_matrix: Vec<Vec<ExactNumber>>,
    pub eccentricities: Vec<ExactNumber>,
    pub kirchhoff_index: ExactNumber,
    pub curvature: Vec<ExactNumber>,
    pub resistance_regular: bool,
    pub constant_curvature: Option<ExactNumber>,
}

impl ResistanceReport {
    pub fn n(&self) -> usize {
        self.ecc.len()
    }

    pub fn to_json(&self) -> ReportJson {
        ReportJson {
            n: self.n(),
            resistance_matrix: self.r.rows_iter().map(<[_]>::to_vec).collect(),
            eccentricities: self.ecc.clone(),
            kirchhoff_index: self.kf.clone(),
            curvature: self.kappa.clone(),
            resistance_regular: self.resistance_regular,
            constant_curvature: self.constant_curvature.clone(),
        }
    }
}

impl Serialize for ResistanceReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// `sum_v R(u, v)`, read from the report.
pub fn resistive_eccentricity(report: &ResistanceReport, u: usize) -> Result<ExactNumber, EngineError> {
    let n = report.n();
    if u >= n {
        return Err(EngineError::VertexOutOfRange { vertex: u, n });
    }
    Ok(report.r.row(u).iter().sum())
}

/// Half the sum of all eccentricities.
pub fn kirchhoff_index(report: &ResistanceReport) -> ExactNumber {
    report.ecc.iter().sum::<ExactNumber>() / ExactNumber::from(2)
}

/// The unique solution of `R kappa = 1`.
pub fn curvature_vector(g: &Graph) -> Result<Vec<ExactNumber>, EngineError> {
    if g.n() < 2 {
        return Err(EngineError::TooSmall { n: g.n(), min: 2 });
    }
    let r = GroundedInverse::new(g, 0)?.matrix();
    curvature_from_matrix(&r)
}

fn curvature_from_matrix(r: &Matrix<ExactNumber>) -> Result<Vec<ExactNumber>, EngineError> {
    let ones = vec![ExactNumber::one(); r.rows()];
    Ok(solve_linear_system(r, &ones)?)
}

/// Full report with the constant-curvature identities cross-checked.
pub fn analyze(g: &Graph) -> Result<ResistanceReport, EngineError> {
    let n = g.n();
    if n < 2 {
        return Err(EngineError::TooSmall { n, min: 2 });
    }
    let inv = GroundedInverse::new(g, 0)?;
    let r = inv.matrix();
    let ecc: Vec<ExactNumber> = r.rows_iter().map(|row| row.iter().sum()).collect();
    let kf = ecc.iter().sum::<ExactNumber>() / ExactNumber::from(2);
    if kf != inv.kirchhoff() || ecc != inv.eccentricities() {
        return Err(EngineError::Inconsistent("integer and rational sums disagree".into()));
    }
    let kappa = curvature_from_matrix(&r)?;
    let ones = vec![ExactNumber::one(); n];
    if r.mul_vec(&kappa)? != ones {
        return Err(EngineError::Inconsistent("R * kappa != 1".into()));
    }

    let resistance_regular = ecc.iter().all(|e| e == &ecc[0]);
    let constant_curvature = if resistance_regular {
        let k = ecc[0].recip();
        let via_kf = ExactNumber::from(n as i64) / (&kf + &kf);
        if k != via_kf || kappa.iter().any(|x| x != &k) {
            return Err(EngineError::Inconsistent(format!(
                "constant curvature mismatch: 1/ecc = {k}, n/(2Kf) = {via_kf}"
            )));
        }
        Some(k)
    } else {
        if kappa.iter().all(|x| x == &kappa[0]) && !kappa[0].is_zero() {
            return Err(EngineError::Inconsistent(
                "constant kappa on a non-regular graph".into(),
            ));
        }
        None
    };

    Ok(ResistanceReport {
        r,
        ecc,
        kf,
        kappa,
        resistance_regular,
        constant_curvature,
    })
}
