use super::EngineError;
use crate::numerics::ExactNumber;

/// Resistance quantities of the cycle `C_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct CycleClosedForms {
    pub n: usize,
    /// `(n^2 - 1) / 6`
    pub ecc: ExactNumber,
    /// `(n^3 - n) / 12`
    pub kf: ExactNumber,
    /// `6 / (n^2 - 1)`
    pub kappa: ExactNumber,
}

impl CycleClosedForms {
    /// `d (n - d) / n` for two vertices at cycle distance `d`.
    pub fn pair_resistance(&self, d: usize) -> Result<ExactNumber, EngineError> {
        let max = self.n / 2;
        if d > max {
            return Err(EngineError::DistanceOutOfRange { d, max });
        }
        Ok(ExactNumber::new((d * (self.n - d)) as i64, self.n as i64))
    }
}

pub fn cycle_closed_forms(n: usize) -> Result<CycleClosedForms, EngineError> {
    if n < 3 {
        return Err(EngineError::TooSmall { n, min: 3 });
    }
    let n_ = n as i64;
    Ok(CycleClosedForms {
        n,
        ecc: ExactNumber::new(n_ * n_ - 1, 6),
        kf: ExactNumber::new(n_ * n_ * n_ - n_, 12),
        kappa: ExactNumber::new(6, n_ * n_ - 1),
    })
}

/// Resistance quantities of the complete graph `K_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct CompleteClosedForms {
    pub n: usize,
    /// `2 / n`
    pub pair_resistance: ExactNumber,
    /// `n - 1`
    pub kf: ExactNumber,
    /// `n / (2n - 2)`
    pub kappa: ExactNumber,
}

pub fn complete_closed_forms(n: usize) -> Result<CompleteClosedForms, EngineError> {
    if n < 2 {
        return Err(EngineError::TooSmall { n, min: 2 });
    }
    let n_ = n as i64;
    Ok(CompleteClosedForms {
        n,
        pair_resistance: ExactNumber::new(2, n_),
        kf: ExactNumber::from(n_ - 1),
        kappa: ExactNumber::new(n_, 2 * n_ - 2),
    })
}
