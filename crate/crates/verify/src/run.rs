//! Suite execution.

use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};
use zeta_core::EvalConfig;

use crate::config::FileConfig;
use crate::error::{Result, VerifyError};
use crate::grid::{Axis, GridSpec, Point};
use crate::report::{Header, ReportFile, Row, Status};
use crate::suites::{self, Gate, SuiteDef, Tolerance};

pub const ENV_OUT_DIR: &str = "ZETA_VERIFY_OUT_DIR";
pub const ENV_THREADS: &str = "ZETA_VERIFY_THREADS";

/// A fully resolved run.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteSpec {
    pub suite_id: String,
    pub grid: GridSpec,
    pub cfg: EvalConfig,
    pub tol: Tolerance,
    /// Worker threads; `None` lets the pool decide.
    pub threads: Option<usize>,
    /// Record wall-clock seconds per row; off makes reports bitwise reproducible.
    pub timing: bool,
}

/// Settings given on the command line, applied last.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub grid: Vec<(String, Axis)>,
    pub tol_abs: Option<f64>,
    pub tol_rel: Option<f64>,
    pub threads: Option<usize>,
    pub no_timing: bool,
}

fn def(id: &str) -> Result<&'static SuiteDef> {
    suites::lookup(id).ok_or_else(|| VerifyError::config(format!("unknown suite `{id}`; see list-suites")))
}

pub fn env_threads() -> Result<Option<usize>> {
    match std::env::var(ENV_THREADS) {
        Ok(v) => v.trim().parse().map(Some).map_err(|_| VerifyError::config(format!("{ENV_THREADS}={v} is not a thread count"))),
        Err(_) => Ok(None),
    }
}

impl SuiteSpec {
    /// Built-in defaults of a registered suite.
    pub fn defaults(id: &str) -> Result<Self> {
        let d = def(id)?;
        Ok(SuiteSpec {
            suite_id: d.id.to_string(),
            grid: (d.default_grid)(),
            cfg: EvalConfig::default(),
            tol: d.tolerance,
            threads: None,
            timing: true,
        })
    }

    /// Layers built-in defaults, the file's `[defaults]` and `[suite.<id>]`,
    /// the environment, then the command line. A grid given anywhere replaces
    /// the default grid as a whole; later layers replace individual axes.
    pub fn resolve(id: &str, file: Option<&FileConfig>, ov: &Overrides) -> Result<Self> {
        let mut spec = SuiteSpec::defaults(id)?;
        let mut grid: Option<GridSpec> = None;
        if let Some(f) = file {
            let sections = [Some(f.defaults.clone()), f.section(id)?];
            for s in sections.into_iter().flatten() {
                s.eval.apply(&mut spec.cfg);
                if s.tol_abs.is_some() || s.tol_rel.is_some() {
                    spec.tol = Tolerance { abs: s.tol_abs.or(spec.tol.abs), rel: s.tol_rel.or(spec.tol.rel) };
                }
                spec.threads = s.threads.or(spec.threads);
                let g = s.grid()?;
                if !g.axes.is_empty() {
                    grid = Some(g);
                }
            }
        }
        spec.threads = env_threads()?.or(spec.threads);
        if !ov.grid.is_empty() {
            let g = grid.get_or_insert_with(GridSpec::default);
            for (name, axis) in &ov.grid {
                g.set(name, axis.clone());
            }
        }
        if let Some(g) = grid {
            spec.grid = g;
        }
        if ov.tol_abs.is_some() {
            spec.tol.abs = ov.tol_abs;
        }
        if ov.tol_rel.is_some() {
            spec.tol.rel = ov.tol_rel;
        }
        spec.threads = ov.threads.or(spec.threads);
        spec.timing = !ov.no_timing;
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let d = def(&self.suite_id)?;
        self.grid.validate(d.axes)?;
        self.cfg.validate().map_err(|e| VerifyError::config(e.to_string()))?;
        let finite = |x: Option<f64>| x.map_or(true, |v| v.is_finite() && v >= 0.0);
        if !finite(self.tol.abs) || !finite(self.tol.rel) {
            return Err(VerifyError::config("tolerances must be finite and non-negative"));
        }
        match d.gate {
            Gate::Residual if self.tol.abs.is_none() && self.tol.rel.is_none() => {
                Err(VerifyError::config("residual-gated suite needs tol_abs or tol_rel"))
            }
            Gate::Metric(_) if self.tol.abs.is_none() => Err(VerifyError::config("metric-gated suite needs tol_abs as its bound")),
            _ => Ok(()),
        }
    }

    /// SHA-256 over everything that determines the row values.
    pub fn config_hash(&self) -> String {
        let c = &self.cfg;
        let canonical = json!({
            "suite_id": self.suite_id,
            "grid": self.grid,
            "eval": {
                "abs_tol": c.abs_tol,
                "rel_tol": c.rel_tol,
                "em_terms": c.em_terms,
                "bernoulli_order": c.bernoulli_order,
                "max_series_terms": c.max_series_terms,
                "max_subdivisions": c.max_subdivisions,
            },
            "tol": self.tol,
        });
        hex::encode(Sha256::digest(canonical.to_string().as_bytes()))
    }
}

pub fn judge(gate: Gate, tol: Tolerance, row: &Row) -> Status {
    if row.is_error() {
        return row.status.clone();
    }
    let ok = match gate {
        Gate::Residual => {
            tol.abs.is_some_and(|a| row.abs_residual <= a) || tol.rel.is_some_and(|r| row.rel_residual <= r)
        }
        Gate::Metric(m) => match (row.metric(m), tol.abs) {
            (Some(v), Some(bound)) => v <= bound,
            _ => false,
        },
    };
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn point_params(p: &Point) -> Map<String, Value> {
    p.0.iter().map(|(k, v)| (k.clone(), Value::from(*v))).collect()
}

fn run_point(d: &SuiteDef, spec: &SuiteSpec, p: &Point) -> Row {
    let start = Instant::now();
    let outcome = (d.eval)(p, &spec.cfg);
    let seconds = if spec.timing { start.elapsed().as_secs_f64() } else { 0.0 };
    let mut params = point_params(p);
    let mut row = match outcome {
        Ok(rep) => {
            let mut row = Row::from_report(&rep);
            for (k, v) in std::mem::take(&mut row.params) {
                params.entry(k).or_insert(v);
            }
            row
        }
        Err(e) => Row::failed(d.id, Map::new(), e.to_string()),
    };
    row.params = params;
    row.seconds = seconds;
    row.status = judge(d.gate, spec.tol, &row);
    row
}

/// Evaluates every grid point; rows come back in grid order regardless of
/// thread count. Points that fail to evaluate become error rows.
pub fn run_suite(spec: &SuiteSpec) -> Result<ReportFile> {
    spec.validate()?;
    let d = def(&spec.suite_id)?;
    let points = spec.grid.points();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.threads.unwrap_or(0))
        .build()
        .map_err(|e| VerifyError::config(format!("thread pool: {e}")))?;
    let rows: Vec<Row> = pool.install(|| points.par_iter().map(|p| run_point(d, spec, p)).collect());
    let header = Header {
        suite_id: d.id.to_string(),
        label: d.label(),
        config_hash: spec.config_hash(),
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
        tol_abs: spec.tol.abs,
        tol_rel: spec.tol.rel,
        gate: d.gate.describe(),
    };
    Ok(ReportFile { header, metric_columns: d.metrics.iter().map(|s| s.to_string()).collect(), rows })
}
