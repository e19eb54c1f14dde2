//! Report rows and their CSV / JSON encodings.

use std::io::Write;

use serde::Serialize;
use serde_json::{Map, Value};
use zeta_core::{IdentityReport, ParamValue, C64};

use crate::error::Result;

/// Fixed leading CSV columns.
pub const CSV_HEADER: [&str; 10] =
    ["identity_id", "param_json", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_residual", "rel_residual", "evals", "seconds"];

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", content = "message", rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error(String),
}

/// One evaluated grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub identity_id: String,
    /// Full parameter point, in a fixed key order.
    pub params: Map<String, Value>,
    pub lhs: C64,
    pub rhs: C64,
    pub abs_residual: f64,
    pub rel_residual: f64,
    pub evals: usize,
    pub seconds: f64,
    /// Suite-specific derived columns, always in the suite's declared order.
    pub metrics: Vec<(String, f64)>,
    pub status: Status,
}

pub fn param_json(v: ParamValue) -> Value {
    match v {
        ParamValue::Int(i) => Value::from(i),
        ParamValue::Real(x) => Value::from(x),
        ParamValue::Complex(z) => Value::from(vec![z.re, z.im]),
    }
}

impl Row {
    pub fn from_report(r: &IdentityReport) -> Self {
        let params = r.params.0.iter().map(|(k, v)| (k.to_string(), param_json(*v))).collect();
        Row {
            identity_id: r.identity_id.to_string(),
            params,
            lhs: r.lhs,
            rhs: r.rhs,
            abs_residual: r.abs_residual,
            rel_residual: r.rel_residual,
            evals: r.cost.evaluations,
            seconds: 0.0,
            metrics: r.metrics.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            status: Status::Pass,
        }
    }

    /// A row for a grid point whose evaluation failed.
    pub fn failed(identity_id: &str, params: Map<String, Value>, message: String) -> Self {
        Row {
            identity_id: identity_id.to_string(),
            params,
            lhs: C64::new(f64::NAN, f64::NAN),
            rhs: C64::new(f64::NAN, f64::NAN),
            abs_residual: f64::NAN,
            rel_residual: f64::NAN,
            evals: 0,
            seconds: 0.0,
            metrics: Vec::new(),
            status: Status::Error(message),
        }
    }

    pub fn metric(&self, name: &str) -> Option<f64> {
        self.metrics.iter().find(|(k, _)| k == name).map(|(_, v)| *v)
    }

    pub fn is_error(&self) -> bool {
        matches!(self.status, Status::Error(_))
    }

    pub fn param_text(&self) -> String {
        Value::Object(self.params.clone()).to_string()
    }
}

/// Run metadata written ahead of the rows.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Header {
    pub suite_id: String,
    pub label: String,
    pub config_hash: String,
    pub tool_version: String,
    pub timestamp: String,
    pub tol_abs: Option<f64>,
    pub tol_rel: Option<f64>,
    pub gate: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportFile {
    pub header: Header,
    /// Names of the suite's extra columns.
    pub metric_columns: Vec<String>,
    pub rows: Vec<Row>,
}

/// 17 significant digits, round-trip exact.
pub fn fmt_f64(x: f64) -> String {
    if x.is_nan() {
        "NaN".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{x:.16e}")
    }
}

impl ReportFile {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.status == Status::Pass)
    }

    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| r.status != Status::Pass).count()
    }

    pub fn csv_header(&self) -> Vec<String> {
        let mut h: Vec<String> = CSV_HEADER.iter().map(|s| s.to_string()).collect();
        h.extend(self.metric_columns.iter().cloned());
        h.push("status".into());
        h.push("message".into());
        h
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
        w.write_record(self.csv_header())?;
        for r in &self.rows {
            let mut rec = vec![
                r.identity_id.clone(),
                r.param_text(),
                fmt_f64(r.lhs.re),
                fmt_f64(r.lhs.im),
                fmt_f64(r.rhs.re),
                fmt_f64(r.rhs.im),
                fmt_f64(r.abs_residual),
                fmt_f64(r.rel_residual),
                r.evals.to_string(),
                fmt_f64(r.seconds),
            ];
            for m in &self.metric_columns {
                rec.push(r.metric(m).map(fmt_f64).unwrap_or_default());
            }
            let (status, msg) = match &r.status {
                Status::Pass => ("pass", String::new()),
                Status::Fail => ("fail", String::new()),
                Status::Error(m) => ("error", m.clone()),
            };
            rec.push(status.into());
            rec.push(msg);
            w.write_record(&rec)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let float = |x: f64| if x.is_finite() { Value::from(x) } else { Value::from(fmt_f64(x)) };
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let mut o = Map::new();
                o.insert("identity_id".into(), r.identity_id.clone().into());
                o.insert("params".into(), Value::Object(r.params.clone()));
                o.insert("lhs".into(), Value::from(vec![float(r.lhs.re), float(r.lhs.im)]));
                o.insert("rhs".into(), Value::from(vec![float(r.rhs.re), float(r.rhs.im)]));
                o.insert("abs_residual".into(), float(r.abs_residual));
                o.insert("rel_residual".into(), float(r.rel_residual));
                o.insert("evals".into(), r.evals.into());
                o.insert("seconds".into(), float(r.seconds));
                let m: Map<String, Value> = r.metrics.iter().map(|(k, v)| (k.clone(), float(*v))).collect();
                o.insert("metrics".into(), Value::Object(m));
                o.insert("status".into(), serde_json::to_value(&r.status).unwrap_or(Value::Null));
                Value::Object(o)
            })
            .collect();
        serde_json::json!({ "header": self.header, "rows": rows })
    }

    pub fn write_json<W: Write>(&self, mut out: W) -> Result<()> {
        serde_json::to_writer_pretty(&mut out, &self.to_json())?;
        out.write_all(b"\n")?;
        Ok(())
    }
}
