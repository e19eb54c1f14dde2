use crate::error::{Error, Result};

/// Accuracy and budget knobs shared by every evaluator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    /// Absolute tolerance handed to quadrature.
    pub abs_tol: f64,
    /// Relative tolerance handed to quadrature and series truncation.
    pub rel_tol: f64,
    /// Minimum number of terms summed directly before the Euler-Maclaurin tail.
    pub em_terms: usize,
    /// Number of Bernoulli corrections in the Euler-Maclaurin tail (even, at most 60).
    pub bernoulli_order: usize,
    /// Hard cap on directly summed series terms.
    pub max_series_terms: usize,
    /// Hard cap on adaptive quadrature subdivisions per integral.
    pub max_subdivisions: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-14,
            rel_tol: 1e-12,
            em_terms: 10,
            bernoulli_order: 24,
            max_series_terms: 50_000_000,
            max_subdivisions: 200_000,
        }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol >= 0.0 && self.rel_tol >= 0.0) || (self.abs_tol == 0.0 && self.rel_tol == 0.0) {
            return Err(Error::Config("tolerances must be non-negative and not both zero"));
        }
        if !self.abs_tol.is_finite() || !self.rel_tol.is_finite() {
            return Err(Error::Config("tolerances must be finite"));
        }
        if self.bernoulli_order < 2 || self.bernoulli_order > 60 || self.bernoulli_order % 2 != 0 {
            return Err(Error::Config("bernoulli_order must be even and in 2..=60"));
        }
        if self.max_series_terms == 0 || self.max_subdivisions == 0 {
            return Err(Error::Config("budgets must be positive"));
        }
        Ok(())
    }

    pub fn with_tolerances(mut self, abs_tol: f64, rel_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self.rel_tol = rel_tol;
        self
    }

    /// Tolerance target for a quantity of magnitude `scale`.
    #[inline]
    pub fn target(&self, scale: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * scale)
    }
}
