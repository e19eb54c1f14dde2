//! Declarative run configuration.
//!
//! ```toml
//! [defaults]
//! threads = 4
//! [defaults.eval]
//! rel_tol = 1e-12
//!
//! [suite.quadratic_moment]
//! tol_rel = 1e-7
//! [suite.quadratic_moment.grid]
//! u = { values = [2, 3, 4] }
//! t = { min = 0, max = 4, count = 3, spacing = "linear" }
//! ```

use std::path::Path;

use serde::Deserialize;
use zeta_core::EvalConfig;

use crate::error::{Result, VerifyError};
use crate::grid::{Axis, GridSpec};
use crate::suites;

/// Overrides of [`EvalConfig`] fields.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvalSection {
    pub abs_tol: Option<f64>,
    pub rel_tol: Option<f64>,
    pub em_terms: Option<usize>,
    pub bernoulli_order: Option<usize>,
    pub max_series_terms: Option<usize>,
    pub max_subdivisions: Option<usize>,
}

impl EvalSection {
    pub fn apply(&self, cfg: &mut EvalConfig) {
        if let Some(v) = self.abs_tol {
            cfg.abs_tol = v;
        }
        if let Some(v) = self.rel_tol {
            cfg.rel_tol = v;
        }
        if let Some(v) = self.em_terms {
            cfg.em_terms = v;
        }
        if let Some(v) = self.bernoulli_order {
            cfg.bernoulli_order = v;
        }
        if let Some(v) = self.max_series_terms {
            cfg.max_series_terms = v;
        }
        if let Some(v) = self.max_subdivisions {
            cfg.max_subdivisions = v;
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Section {
    pub tol_abs: Option<f64>,
    pub tol_rel: Option<f64>,
    pub threads: Option<usize>,
    #[serde(default)]
    pub eval: EvalSection,
    #[serde(default)]
    pub grid: toml::Table,
}

impl Section {
    /// Grid axes in file order.
    pub fn grid(&self) -> Result<GridSpec> {
        let mut g = GridSpec::default();
        for (name, value) in &self.grid {
            let axis: Axis = value
                .clone()
                .try_into()
                .map_err(|e| VerifyError::config(format!("axis {name}: {e}")))?;
            g.set(name, axis);
        }
        Ok(g)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    #[serde(default)]
    pub defaults: Section,
    #[serde(default)]
    pub suite: toml::Table,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| VerifyError::Read { path: path.to_path_buf(), source })?;
        let cfg: FileConfig = toml::from_str(&text).map_err(|source| VerifyError::Toml { path: path.to_path_buf(), source })?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let cfg: FileConfig = toml::from_str(text).map_err(|e| VerifyError::config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<()> {
        if !self.defaults.grid.is_empty() {
            return Err(VerifyError::config("[defaults] cannot carry a grid"));
        }
        for id in self.suite.keys() {
            if suites::lookup(id).is_none() {
                return Err(VerifyError::config(format!("unknown suite `{id}` in configuration")));
            }
            self.section(id)?;
        }
        Ok(())
    }

    pub fn section(&self, id: &str) -> Result<Option<Section>> {
        match self.suite.get(id) {
            None => Ok(None),
            Some(v) => v
                .clone()
                .try_into()
                .map(Some)
                .map_err(|e| VerifyError::config(format!("[suite.{id}]: {e}"))),
        }
    }
}
