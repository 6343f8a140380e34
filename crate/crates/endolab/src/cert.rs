//! Machine-readable pass/fail records shared by every certification
//! routine. A certificate passes iff its margin is strictly positive.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Certificate {
    /// Which statement was checked.
    pub lemma: String,
    /// Grid or sampling scheme the margin was measured on.
    pub grid: String,
    /// Worst-case margin; positive means the statement held everywhere.
    pub margin: f64,
    /// Tolerance the margin was measured against (0 for strict inequalities).
    pub tolerance: f64,
    pub pass: bool,
    /// Location achieving the worst margin, when meaningful.
    pub witness: Option<[f64; 2]>,
    pub detail: String,
}

impl Certificate {
    pub fn from_margin(
        lemma: &str,
        grid: &str,
        margin: f64,
        tolerance: f64,
        witness: Option<[f64; 2]>,
        detail: &str,
    ) -> Certificate {
        Certificate {
            lemma: lemma.to_string(),
            grid: grid.to_string(),
            margin,
            tolerance,
            pass: margin > 0.0,
            witness,
            detail: detail.to_string(),
        }
    }

    /// Certificate for a residual-style check: passes iff the worst
    /// residual stays below the tolerance.
    pub fn from_residual(
        lemma: &str,
        grid: &str,
        worst_residual: f64,
        tolerance: f64,
        witness: Option<[f64; 2]>,
        detail: &str,
    ) -> Certificate {
        Certificate::from_margin(lemma, grid, tolerance - worst_residual, tolerance, witness, detail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_iff_positive_margin() {
        let c = Certificate::from_margin("t", "g", 0.1, 0.0, None, "");
        assert!(c.pass);
        let c = Certificate::from_margin("t", "g", -0.1, 0.0, None, "");
        assert!(!c.pass);
        let c = Certificate::from_residual("t", "g", 5e-11, 1e-10, None, "");
        assert!(c.pass);
        let c = Certificate::from_residual("t", "g", 2e-10, 1e-10, None, "");
        assert!(!c.pass);
    }
}
