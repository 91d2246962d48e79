use serde::Serialize;

use crate::error::{Error, Result};

/// Numerical tolerances used by condition checks and the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerance {
    /// Relative slack for "equals the supremum" and monotonicity decisions.
    pub condition_rel: f64,
    /// Absolute tolerance for comparing oracle values against each other.
    pub oracle_abs: f64,
}

impl Tolerance {
    pub fn new(condition_rel: f64, oracle_abs: f64) -> Result<Self> {
        if !(condition_rel > 0.0 && condition_rel < 1e-3) {
            return Err(Error::InvalidTolerance(format!(
                "condition_rel = {condition_rel} not in (0, 1e-3)"
            )));
        }
        if !(oracle_abs > 0.0 && oracle_abs < 1e-2) {
            return Err(Error::InvalidTolerance(format!(
                "oracle_abs = {oracle_abs} not in (0, 1e-2)"
            )));
        }
        Ok(Self {
            condition_rel,
            oracle_abs,
        })
    }

    /// `|value - target| <= condition_rel * |target|`, or `<= 1e-12` when the
    /// target is zero.
    pub fn matches(&self, value: f64, target: f64) -> bool {
        let slack = if target == 0.0 {
            1e-12
        } else {
            self.condition_rel * target.abs()
        };
        (value - target).abs() <= slack
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            condition_rel: 1e-9,
            oracle_abs: 1e-8,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_enforced() {
        assert!(Tolerance::new(1e-9, 1e-8).is_ok());
        assert!(Tolerance::new(0.0, 1e-8).is_err());
        assert!(Tolerance::new(1e-3, 1e-8).is_err());
        assert!(Tolerance::new(1e-9, 0.02).is_err());
        assert!(Tolerance::new(f64::NAN, 1e-8).is_err());
    }

    #[test]
    fn relative_matching() {
        let t = Tolerance::default();
        assert!(t.matches(1.0 + 1e-10, 1.0));
        assert!(!t.matches(1.0 + 1e-8, 1.0));
        assert!(t.matches(1e-13, 0.0));
        assert!(!t.matches(1e-11, 0.0));
    }
}
