//! Uniform result records produced by the identity verifiers.

use alloc::vec::Vec;

use crate::C64;

/// A named parameter value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ParamValue {
    Int(i64),
    Real(f64),
    Complex(C64),
}

impl From<i64> for ParamValue {
    fn from(v: i64) -> Self {
        ParamValue::Int(v)
    }
}

impl From<u64> for ParamValue {
    fn from(v: u64) -> Self {
        ParamValue::Int(v as i64)
    }
}

impl From<u32> for ParamValue {
    fn from(v: u32) -> Self {
        ParamValue::Int(v as i64)
    }
}

impl From<usize> for ParamValue {
    fn from(v: usize) -> Self {
        ParamValue::Int(v as i64)
    }
}

impl From<f64> for ParamValue {
    fn from(v: f64) -> Self {
        ParamValue::Real(v)
    }
}

impl From<C64> for ParamValue {
    fn from(v: C64) -> Self {
        ParamValue::Complex(v)
    }
}

/// Ordered list of named parameters describing a grid point.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Params(pub Vec<(&'static str, ParamValue)>);

impl Params {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn with(mut self, name: &'static str, value: impl Into<ParamValue>) -> Self {
        self.0.push((name, value.into()));
        self
    }

    pub fn get(&self, name: &str) -> Option<ParamValue> {
        self.0.iter().find(|(k, _)| *k == name).map(|(_, v)| *v)
    }
}

/// Work counters attached to a report.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Cost {
    /// Integrand or series-term evaluations.
    pub evaluations: usize,
}

impl core::ops::AddAssign for Cost {
    fn add_assign(&mut self, rhs: Self) {
        self.evaluations += rhs.evaluations;
    }
}

/// Outcome of comparing two independently computed sides of an identity.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub identity_id: &'static str,
    pub params: Params,
    pub lhs: C64,
    pub rhs: C64,
    pub abs_residual: f64,
    pub rel_residual: f64,
    pub cost: Cost,
    /// Extra derived quantities (scaled residuals, ratios, envelopes).
    pub metrics: Vec<(&'static str, f64)>,
}

impl IdentityReport {
    pub fn new(identity_id: &'static str, params: Params, lhs: C64, rhs: C64, cost: Cost) -> Self {
        let abs_residual = (lhs - rhs).norm();
        let scale = lhs.norm().max(rhs.norm());
        let rel_residual = if scale > 0.0 { abs_residual / scale } else { abs_residual };
        Self {
            identity_id,
            params,
            lhs,
            rhs,
            abs_residual,
            rel_residual,
            cost,
            metrics: Vec::new(),
        }
    }

    pub fn with_metric(mut self, name: &'static str, value: f64) -> Self {
        self.metrics.push((name, value));
        self
    }

    pub fn metric(&self, name: &str) -> Option<f64> {
        self.metrics.iter().find(|(k, _)| *k == name).map(|(_, v)| *v)
    }
}
