//! Registry of verification suites.

use serde::Serialize;
use zeta_core::afe::{
    afe_hurwitz_residual, afe_zeta_residual, lemma3_integral, projection_identity_check, theorem1_check, weak_afe_residual, AfeResidual,
};
use zeta_core::fourier::{
    fourth_moment_cutoff, highfreq_tail_check, parseval_fourth_moment, parseval_second_moment, qn_continued, qn_direct,
    qn_fourier_quadrature, rane_representation, second_moment_cutoff, tail_lemma_check, theorem2_check,
};
use zeta_core::identities::{
    decomposition_check, f_contour, f_series, i1_asymptotic_check, katsurada_split_check, mellin_tail_closed_form,
    mellin_tail_quadrature, remark_219_check, unit_interval_recursion, verify_katsurada, verify_moment, verify_square_identity,
    MomentParams,
};
use zeta_core::special::hurwitz_zeta1;
use zeta_core::{Cost, EvalConfig, IdentityReport, Params, Result, C64};

use crate::closed_form;
use crate::grid::{Axis, GridSpec, Point, Spacing};
use crate::oracle;

/// How a row is judged.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gate {
    /// Within tolerance if `abs_residual <= tol_abs` or `rel_residual <= tol_rel`.
    Residual,
    /// Within tolerance if the named metric is at most `tol_abs`.
    Metric(&'static str),
}

impl Gate {
    pub fn describe(&self) -> String {
        match self {
            Gate::Residual => "residual".into(),
            Gate::Metric(m) => format!("metric:{m}"),
        }
    }
}

/// Pass thresholds for a suite. `None` disables that half of the test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerance {
    pub abs: Option<f64>,
    pub rel: Option<f64>,
}

impl Tolerance {
    pub const fn rel(r: f64) -> Self {
        Tolerance { abs: None, rel: Some(r) }
    }

    pub const fn abs(a: f64) -> Self {
        Tolerance { abs: Some(a), rel: None }
    }

    pub const fn both(a: f64, r: f64) -> Self {
        Tolerance { abs: Some(a), rel: Some(r) }
    }
}

pub type Evaluator = fn(&Point, &EvalConfig) -> Result<IdentityReport>;

/// A registered verifier.
pub struct SuiteDef {
    pub id: &'static str,
    /// Equation or theorem the suite checks.
    pub anchor: &'static str,
    pub summary: &'static str,
    pub axes: &'static [&'static str],
    pub default_grid: fn() -> GridSpec,
    pub tolerance: Tolerance,
    pub gate: Gate,
    /// Extra report columns, in order.
    pub metrics: &'static [&'static str],
    pub eval: Evaluator,
}

impl SuiteDef {
    pub fn label(&self) -> String {
        format!("{} ({})", self.id, self.anchor)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteInfo {
    pub id: &'static str,
    pub label: String,
    pub anchor: &'static str,
    pub summary: &'static str,
    pub axes: &'static [&'static str],
    pub gate: String,
    pub tol_abs: Option<f64>,
    pub tol_rel: Option<f64>,
    pub default_points: usize,
}

impl From<&SuiteDef> for SuiteInfo {
    fn from(s: &SuiteDef) -> Self {
        SuiteInfo {
            id: s.id,
            label: s.label(),
            anchor: s.anchor,
            summary: s.summary,
            axes: s.axes,
            gate: s.gate.describe(),
            tol_abs: s.tolerance.abs,
            tol_rel: s.tolerance.rel,
            default_points: (s.default_grid)().points().len(),
        }
    }
}

pub fn lookup(id: &str) -> Option<&'static SuiteDef> {
    SUITES.iter().find(|s| s.id == id)
}

pub fn registry() -> &'static [SuiteDef] {
    SUITES
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn get(p: &Point, name: &str, default: f64) -> f64 {
    p.get(name).unwrap_or(default)
}

fn vals(v: &[f64]) -> Axis {
    Axis::values(v)
}

/// `u + it` and `v - it`, with `v` defaulting to `u`.
fn pair(p: &Point, u0: f64) -> (C64, C64) {
    let u = get(p, "u", u0);
    let v = get(p, "v", u);
    let t = get(p, "t", 0.0);
    (c(u, t), c(v, 0.0 - t))
}

fn afe_report(id: &'static str, r: AfeResidual) -> IdentityReport {
    IdentityReport::new(id, Params::new().with("s", r.s), r.exact, r.approximation, Cost::default())
        .with_metric("residual", r.residual)
        .with_metric("scaled", r.scaled)
}

fn moments(p: &Point, k: usize, cfg: &EvalConfig) -> Result<IdentityReport> {
    const NAMES: [&str; 4] = ["u1", "u2", "u3", "u4"];
    let base = get(p, "u", 2.0);
    let t = get(p, "t", 0.0);
    let us: Vec<C64> = NAMES[..k]
        .iter()
        .enumerate()
        .map(|(j, n)| c(get(p, n, base), if j % 2 == 0 { t } else { 0.0 - t }))
        .collect();
    verify_moment(&MomentParams::new(&us)?, cfg)
}

fn square(p: &Point, cfg: &EvalConfig) -> Result<IdentityReport> {
    verify_square_identity(c(get(p, "sigma", 1.5), get(p, "t", 0.0)), get(p, "alpha", 0.0), None, cfg)
}

fn double_sum(p: &Point, cfg: &EvalConfig) -> Result<IdentityReport> {
    let (u, v) = pair(p, 2.0);
    let alpha = get(p, "alpha", 1.0);
    let a = f_series(u, v, alpha, cfg)?;
    let b = f_contour(u, v, alpha, None, cfg)?;
    Ok(IdentityReport::new("double_sum", Params::new().with("u", u).with("v", v).with("alpha", alpha), a, b, Cost::default()))
}

fn decomposition(p: &Point, cfg: &EvalConfig) -> Result<IdentityReport> {
    let (u, v) = pair(p, 2.0);
    decomposition_check(u, v, get(p, "alpha", 1.0), cfg)
}

fn quadratic(p: &Point, cfg: &EvalConfig) -> Result<IdentityReport> {
    let (u, v) = pair(p, 2.0);
    verify_moment(&MomentParams::new(&[u, v])?, cfg)
}

fn triple(p: &Point, cfg: &EvalConfig) -> Result<IdentityReport> {
    moments(p, 3, cfg)
}

fn quadruple(p: &Point, cfg: &EvalConfig) -> Result<IdentityReport> {
    moments(p, 4, cfg)
}

fn mellin_tail(p: &Point, cfg: &EvalConfig) -> Result<IdentityReport> {
    let u = c(get(p, "u", 3.0), get(p, "t", 0.0));
    let v = c(get(p, "v", 0.0), 0.0);
    let q = mellin_tail_quadrature(u, v, cfg)?;
    let closed = mellin_tail_closed_form(u, v, cfg)?;
    Ok(IdentityReport::new("mellin_tail", Params::new().with("u", u).with("v", v), q.value, closed, Cost { evaluations: q.evaluations }))
}

fn unit_interval(p: &Point, cfg: &EvalConfig) -> Result<IdentityReport> {
    let (u, v) = pair(p, 2.0);
    unit_interval_recursion(u, v, cfg)
}

fn katsurada(p: &Point, cfg: &EvalConfig) -> Result<IdentityReport> {
    let (u, v) = pair(p, 1.5);
    verify_katsurada(u, v, cfg)
}

fn katsurada_split(p: &Point, cfg: &EvalConfig) -> Result<IdentityReport> {
    let (u, v) = pair(p, 1.5);
    katsurada_split_check(u, v, cfg)
}

fn i1(p: &Point, cfg: &EvalConfig) -> Result<IdentityReport> {
    i1_asymptotic_check(&[get(p, "t", 100.0)], cfg).map(|mut v| v.remove(0))
}

fn remark_219(p: &Point, cfg: &EvalConfig) -> Result<IdentityReport> {
    let (u, v) = pair(p, 1.5);
    remark_219_check(u, v, cfg)
}

fn afe_zeta(p: &Point, cfg: &EvalConfig) -> Result<IdentityReport> {
    afe_zeta_residual(c(get(p, "sigma", 0.5), get(p, "t", 100.0)), cfg).map(|r| afe_report("afe_zeta", r))
}

fn afe_hurwitz(p: &Point, cfg: &EvalConfig) -> Result<IdentityReport> {
    afe_hurwitz_residual(c(get(p, "sigma", 0.5), get(p, "t", 100.0)), get(p, "alpha", 0.5), cfg).map(|r| afe_report("afe_hurwitz", r))
}

fn projection(p: &Point, cfg: &EvalConfig) -> Result<IdentityReport> {
    projection_identity_check(c(get(p, "sigma", 0.0), get(p, "t", 0.0)), get(p, "n", 10.0) as u64, false, cfg)
}

fn projection_mirrored(p: &Point, cfg: &EvalConfig) -> Result<IdentityReport> {
    projection_identity_check(c(get(p, "sigma", 0.0), get(p, "t", 0.0)), get(p, "n", 10.0) as u64, true, cfg)
}

fn weak_afe(p: &Point, cfg: &EvalConfig) -> Result<IdentityReport> {
    weak_afe_residual(c(get(p, "sigma", 0.5), get(p, "t", 100.0)), cfg).map(|r| afe_report("weak_afe", r))
}

fn lemma3(p: &Point, cfg: &EvalConfig) -> Result<IdentityReport> {
    lemma3_integral(c(get(p, "sigma", 0.5), get(p, "t", 100.0)), cfg).map(|(_, r)| r)
}

fn theorem1(p: &Point, cfg: &EvalConfig) -> Result<IdentityReport> {
    let k = get(p, "k", 1.0) as u32;
    let t = get(p, "t", 100.0);
    let r = theorem1_check(k, &[t], cfg)?.remove(0);
    let bound = t.powf(1.0 / (4.0 * k as f64)) * r.ik.powf(1.0 / (2.0 * k as f64));
    Ok(IdentityReport::new("theorem1", Params::new().with("k", k).with("t", t), c(r.zeta_abs, 0.0), c(bound, 0.0), Cost::default())
        .with_metric("ik", r.ik)
        .with_metric("ratio", r.ratio))
}

fn rane(p: &Point, cfg: &EvalConfig) -> Result<IdentityReport> {
    let s = c(get(p, "sigma", 0.5), get(p, "t", 10.0));
    let alpha = get(p, "alpha", 0.5);
    let m = get(p, "n", 50.0) as u64;
    let lhs = rane_representation(s, alpha, m, cfg)?;
    let rhs = hurwitz_zeta1(s, alpha, cfg)?;
    Ok(IdentityReport::new("rane", Params::new().with("s", s).with("alpha", alpha).with("m", m), lhs, rhs, Cost::default()))
}

fn tail_lemma(p: &Point, cfg: &EvalConfig) -> Result<IdentityReport> {
    let s = c(get(p, "sigma", 0.5), get(p, "t", 50.0));
    tail_lemma_check(s, get(p, "alpha", 20.0), get(p, "eta", 1.0), cfg)
}

fn qn_pair(p: &Point, u0: f64) -> (i64, C64, C64) {
    let (u, v) = pair(p, u0);
    (get(p, "n", 1.0) as i64, u, v)
}

fn qn(p: &Point, cfg: &EvalConfig) -> Result<IdentityReport> {
    let (n, u, v) = qn_pair(p, 2.0);
    let a = qn_direct(n, u, v, cfg)?;
    let b = qn_fourier_quadrature(n, u, v, cfg)?;
    Ok(IdentityReport::new("qn_direct", Params::new().with("n", n).with("u", u).with("v", v), a, b.value, Cost { evaluations: b.evaluations }))
}

fn qn_cont(p: &Point, cfg: &EvalConfig) -> Result<IdentityReport> {
    let (n, u, v) = qn_pair(p, 0.6);
    let a = qn_continued(n, u, v, cfg)?;
    let b = qn_fourier_quadrature(n, u, v, cfg)?;
    Ok(IdentityReport::new("qn_continued", Params::new().with("n", n).with("u", u).with("v", v), a, b.value, Cost { evaluations: b.evaluations }))
}

fn highfreq(p: &Point, cfg: &EvalConfig) -> Result<IdentityReport> {
    let u = c(get(p, "sigma", 0.5), get(p, "t", 50.0));
    highfreq_tail_check(get(p, "n", 20.0) as i64, u, u.conj(), get(p, "eta", 1.0), cfg)
}

fn parseval2(p: &Point, cfg: &EvalConfig) -> Result<IdentityReport> {
    let t = get(p, "t", 0.0);
    let s = c(get(p, "sigma", 2.0), t);
    let n = p.get("n").map(|n| n as i64).unwrap_or_else(|| second_moment_cutoff(t));
    parseval_second_moment(s, n, cfg)
}

fn parseval4(p: &Point, cfg: &EvalConfig) -> Result<IdentityReport> {
    let t = get(p, "t", 50.0);
    let u = c(get(p, "sigma", 0.5), t);
    let n = p.get("n").map(|n| n as i64).unwrap_or_else(|| fourth_moment_cutoff(t));
    parseval_fourth_moment(u, get(p, "eta", 1.0), n, cfg)
}

fn theorem2(p: &Point, cfg: &EvalConfig) -> Result<IdentityReport> {
    let t = get(p, "t", 50.0);
    let eta = get(p, "eta", 1.0);
    let r = theorem2_check(&[t], eta, cfg)?.remove(0);
    Ok(IdentityReport::new("theorem2", Params::new().with("t", t).with("eta", eta), c(r.zeta_fourth, 0.0), c(t.sqrt() * r.sum, 0.0), Cost::default())
        .with_metric("sum", r.sum)
        .with_metric("ratio", r.ratio))
}

fn g_square() -> GridSpec {
    GridSpec::default().with("sigma", vals(&[1.2, 1.5, 2.0])).with("t", vals(&[1.0, 5.0, 10.0])).with("alpha", vals(&[0.0, 0.5, 1.0]))
}

fn g_pair() -> GridSpec {
    GridSpec::default().with("u", vals(&[1.5, 2.0])).with("v", vals(&[2.0, 3.0])).with("t", vals(&[0.0, 1.0])).with("alpha", vals(&[0.0, 1.0]))
}

fn g_quadratic() -> GridSpec {
    GridSpec::default().with("u", vals(&[2.0, 3.0])).with("v", vals(&[1.5, 2.5])).with("t", vals(&[0.0, 2.0]))
}

fn g_triple() -> GridSpec {
    GridSpec::default().with("u1", vals(&[2.0])).with("u2", vals(&[2.5, 3.0])).with("u3", vals(&[1.5, 4.0])).with("t", vals(&[0.0, 1.0]))
}

fn g_quadruple() -> GridSpec {
    GridSpec::default().with("u1", vals(&[2.0])).with("u2", vals(&[2.5])).with("u3", vals(&[1.5, 3.0])).with("u4", vals(&[2.0])).with("t", vals(&[0.0, 1.0]))
}

fn g_mellin() -> GridSpec {
    GridSpec::default().with("u", vals(&[2.5, 3.0])).with("v", vals(&[0.0, 0.5])).with("t", vals(&[0.0, 2.0]))
}

fn g_unit() -> GridSpec {
    GridSpec::default().with("u", vals(&[2.0, 3.0])).with("v", vals(&[0.0, 0.5])).with("t", vals(&[0.0]))
}

fn g_katsurada() -> GridSpec {
    GridSpec::default().with("u", vals(&[1.3, 1.7])).with("v", vals(&[1.3, 1.7])).with("t", vals(&[0.0, 3.0]))
}

fn g_i1() -> GridSpec {
    GridSpec::default().with("t", Axis::range(50.0, 800.0, 5, Spacing::Geometric))
}

fn g_remark() -> GridSpec {
    GridSpec::default().with("u", vals(&[1.5])).with("t", vals(&[50.0, 100.0, 200.0, 400.0]))
}

fn g_afe() -> GridSpec {
    GridSpec::default().with("sigma", vals(&[0.3, 0.5, 0.7])).with("t", Axis::range(25.0, 1600.0, 7, Spacing::Geometric))
}

fn g_afe_hurwitz() -> GridSpec {
    GridSpec::default().with("sigma", vals(&[0.5])).with("t", Axis::range(25.0, 400.0, 5, Spacing::Geometric)).with("alpha", vals(&[0.25, 0.5, 0.75]))
}

fn g_projection() -> GridSpec {
    GridSpec::default().with("sigma", vals(&[-0.5, 0.5])).with("t", vals(&[0.0, 3.0])).with("n", vals(&[7.0, 50.0, 100.0]))
}

fn g_weak() -> GridSpec {
    GridSpec::default().with("sigma", vals(&[0.5])).with("t", Axis::range(25.0, 400.0, 5, Spacing::Geometric))
}

fn g_theorem1() -> GridSpec {
    GridSpec::default().with("k", vals(&[1.0, 2.0])).with("t", Axis::range(50.0, 800.0, 5, Spacing::Geometric))
}

fn g_rane() -> GridSpec {
    GridSpec::default().with("sigma", vals(&[0.5, 2.0])).with("t", vals(&[0.0, 10.0])).with("alpha", vals(&[0.3, 1.5])).with("n", vals(&[50.0, 200.0]))
}

fn g_tail() -> GridSpec {
    GridSpec::default().with("sigma", vals(&[0.5])).with("t", vals(&[20.0, 50.0])).with("alpha", vals(&[10.0, 20.0, 40.0])).with("eta", vals(&[1.0]))
}

fn g_qn() -> GridSpec {
    GridSpec::default().with("n", vals(&[-3.0, 0.0, 1.0, 5.0])).with("u", vals(&[1.5, 2.0])).with("t", vals(&[0.0, 3.0]))
}

fn g_qn_cont() -> GridSpec {
    GridSpec::default().with("n", vals(&[-2.0, 0.0, 3.0])).with("u", vals(&[0.6, 0.8])).with("t", vals(&[0.0, 5.0]))
}

fn g_highfreq() -> GridSpec {
    GridSpec::default().with("n", vals(&[20.0, 40.0, -20.0])).with("sigma", vals(&[0.5])).with("t", vals(&[50.0])).with("eta", vals(&[1.0]))
}

fn g_parseval2() -> GridSpec {
    GridSpec::default().with("sigma", vals(&[0.5, 2.0])).with("t", vals(&[0.0, 10.0, 50.0]))
}

fn g_parseval4() -> GridSpec {
    GridSpec::default().with("sigma", vals(&[0.5])).with("t", vals(&[50.0])).with("eta", vals(&[1.0]))
}

fn g_theorem2() -> GridSpec {
    GridSpec::default().with("t", vals(&[50.0, 100.0, 200.0, 400.0])).with("eta", vals(&[1.0]))
}

fn g_closed() -> GridSpec {
    GridSpec::default().with("n", Axis::range(0.0, (closed_form::case_count() - 1) as f64, closed_form::case_count(), Spacing::Linear))
}

fn g_oracle() -> GridSpec {
    GridSpec::default().with("n", Axis::range(0.0, 99.0, 100, Spacing::Linear))
}

const PAIR: &[&str] = &["u", "v", "t", "alpha"];
const UVT: &[&str] = &["u", "v", "t"];

static SUITES: &[SuiteDef] = &[
    SuiteDef {
        id: "square_identity",
        anchor: "Eq. 1.5",
        summary: "|zeta1(s,a)|^2 against its Mellin-Barnes contour representation",
        axes: &["sigma", "t", "alpha"],
        default_grid: g_square,
        tolerance: Tolerance::rel(1e-6),
        gate: Gate::Residual,
        metrics: &["quad_error"],
        eval: square,
    },
    SuiteDef {
        id: "double_sum",
        anchor: "Eq. th1.5",
        summary: "double Dirichlet series f(u,v,a): direct summation against the contour integral",
        axes: PAIR,
        default_grid: g_pair,
        tolerance: Tolerance::rel(1e-8),
        gate: Gate::Residual,
        metrics: &[],
        eval: double_sum,
    },
    SuiteDef {
        id: "product_decomposition",
        anchor: "Eq. th1.2",
        summary: "zeta1(u,a) zeta1(v,a) = zeta1(u+v,a) + f(u,v,a) + f(v,u,a)",
        axes: PAIR,
        default_grid: g_pair,
        tolerance: Tolerance::rel(1e-9),
        gate: Gate::Residual,
        metrics: &[],
        eval: decomposition,
    },
    SuiteDef {
        id: "quadratic_moment",
        anchor: "Eq. 1.11",
        summary: "int_0^1 zeta1(u,a) zeta1(v,a) da against the rational term plus two Mellin tails",
        axes: UVT,
        default_grid: g_quadratic,
        tolerance: Tolerance::rel(1e-7),
        gate: Gate::Residual,
        metrics: &["rhs_terms", "quad_error"],
        eval: quadratic,
    },
    SuiteDef {
        id: "triple_moment",
        anchor: "Eq. 1.12",
        summary: "third moment identity, 7 right-hand terms",
        axes: &["u1", "u2", "u3", "u", "t"],
        default_grid: g_triple,
        tolerance: Tolerance::rel(1e-6),
        gate: Gate::Residual,
        metrics: &["rhs_terms", "quad_error"],
        eval: triple,
    },
    SuiteDef {
        id: "quadruple_moment",
        anchor: "Eq. 1.13",
        summary: "fourth moment identity, 15 right-hand terms",
        axes: &["u1", "u2", "u3", "u4", "u", "t"],
        default_grid: g_quadruple,
        tolerance: Tolerance::rel(1e-6),
        gate: Gate::Residual,
        metrics: &["rhs_terms", "quad_error"],
        eval: quadruple,
    },
    SuiteDef {
        id: "mellin_tail",
        anchor: "Eq. 2.12",
        summary: "int_0^oo a^-v zeta1(u,a) da by quadrature against its Gamma-zeta closed form",
        axes: UVT,
        default_grid: g_mellin,
        tolerance: Tolerance::rel(1e-8),
        gate: Gate::Residual,
        metrics: &[],
        eval: mellin_tail,
    },
    SuiteDef {
        id: "unit_interval",
        anchor: "Eq. 2.13",
        summary: "int_0^1 a^-v zeta1(u,a) da against its integration-by-parts recursion",
        axes: UVT,
        default_grid: g_unit,
        tolerance: Tolerance::both(1e-8, 1e-8),
        gate: Gate::Residual,
        metrics: &[],
        eval: unit_interval,
    },
    SuiteDef {
        id: "katsurada",
        anchor: "Eq. I1",
        summary: "exact mean-value identity for 1 < Re u, Re v < 2",
        axes: UVT,
        default_grid: g_katsurada,
        tolerance: Tolerance::rel(1e-6),
        gate: Gate::Residual,
        metrics: &[],
        eval: katsurada,
    },
    SuiteDef {
        id: "katsurada_split",
        anchor: "Eq. 2.2",
        summary: "mean-value right-hand side assembled term by term from the Mellin split",
        axes: UVT,
        default_grid: g_katsurada,
        tolerance: Tolerance::rel(1e-9),
        gate: Gate::Residual,
        metrics: &[],
        eval: katsurada_split,
    },
    SuiteDef {
        id: "i1_asymptotic",
        anchor: "I_1 estimate",
        summary: "I_1(t) against log(t/2pi) + gamma; diff_t2 = (I_1 - rhs) t^2",
        axes: &["t"],
        default_grid: g_i1,
        tolerance: Tolerance::abs(0.05),
        gate: Gate::Residual,
        metrics: &["diff_t2"],
        eval: i1,
    },
    SuiteDef {
        id: "remark_219",
        anchor: "Eq. 2.19",
        summary: "unit-interval integral against (1/it) sum 1/(m (m+1)^u); residual_t2 = residual t^2",
        axes: UVT,
        default_grid: g_remark,
        tolerance: Tolerance::abs(10.0),
        gate: Gate::Metric("residual_t2"),
        metrics: &["residual_t2", "lhs_t"],
        eval: remark_219,
    },
    SuiteDef {
        id: "afe_zeta",
        anchor: "Eq. fok1",
        summary: "approximate functional equation for zeta; scaled = residual t^(sigma/2)",
        axes: &["sigma", "t"],
        default_grid: g_afe,
        tolerance: Tolerance::abs(5.0),
        gate: Gate::Metric("scaled"),
        metrics: &["residual", "scaled"],
        eval: afe_zeta,
    },
    SuiteDef {
        id: "afe_hurwitz",
        anchor: "Eq. fok2",
        summary: "approximate functional equation for zeta1(s,a), uniform in a",
        axes: &["sigma", "t", "alpha"],
        default_grid: g_afe_hurwitz,
        tolerance: Tolerance::abs(5.0),
        gate: Gate::Metric("scaled"),
        metrics: &["residual", "scaled"],
        eval: afe_hurwitz,
    },
    SuiteDef {
        id: "projection",
        anchor: "Eq. fok3",
        summary: "Dirichlet-kernel projection of a finite power sum",
        axes: &["sigma", "t", "n"],
        default_grid: g_projection,
        tolerance: Tolerance::both(1e-10, 1e-10),
        gate: Gate::Residual,
        metrics: &[],
        eval: projection,
    },
    SuiteDef {
        id: "projection_mirrored",
        anchor: "Eq. fok5",
        summary: "projection with the mirrored kernel B_N(-a)",
        axes: &["sigma", "t", "n"],
        default_grid: g_projection,
        tolerance: Tolerance::both(1e-10, 1e-10),
        gate: Gate::Residual,
        metrics: &[],
        eval: projection_mirrored,
    },
    SuiteDef {
        id: "weak_afe",
        anchor: "Eq. 1.6",
        summary: "integral form of the approximate functional equation; scaled = residual t^(sigma/2) / log t",
        axes: &["sigma", "t"],
        default_grid: g_weak,
        tolerance: Tolerance::abs(5.0),
        gate: Gate::Metric("scaled"),
        metrics: &["residual", "scaled"],
        eval: weak_afe,
    },
    SuiteDef {
        id: "lemma3",
        anchor: "Lemma 3",
        summary: "int_0^1 B_N(a) sum (n+a)^-s da against its two reciprocal sums",
        axes: &["sigma", "t"],
        default_grid: g_weak,
        tolerance: Tolerance::abs(5.0),
        gate: Gate::Metric("scaled"),
        metrics: &["scaled", "boundary", "boundary_scaled", "sums_scaled"],
        eval: lemma3,
    },
    SuiteDef {
        id: "theorem1",
        anchor: "Thm 1",
        summary: "|zeta(1/2+it)| against t^(1/4k) I_k(t)^(1/2k)",
        axes: &["k", "t"],
        default_grid: g_theorem1,
        tolerance: Tolerance::abs(5.0),
        gate: Gate::Metric("ratio"),
        metrics: &["ik", "ratio"],
        eval: theorem1,
    },
    SuiteDef {
        id: "rane",
        anchor: "Eq. Raneeq",
        summary: "Euler-Maclaurin Fourier representation of zeta1(s,a) with M frequencies (n = M)",
        axes: &["sigma", "t", "alpha", "n"],
        default_grid: g_rane,
        tolerance: Tolerance::rel(1e-9),
        gate: Gate::Residual,
        metrics: &[],
        eval: rane,
    },
    SuiteDef {
        id: "tail_lemma",
        anchor: "Lemma intbyparts",
        summary: "oscillatory tail against t a^(-sigma-1) for a >= t/2pi + eta",
        axes: &["sigma", "t", "alpha", "eta"],
        default_grid: g_tail,
        tolerance: Tolerance::abs(1.0),
        gate: Gate::Metric("ratio"),
        metrics: &["ratio", "derivative_ratio"],
        eval: tail_lemma,
    },
    SuiteDef {
        id: "qn_direct",
        anchor: "Lemma 8",
        summary: "q_n(u,v) from the Mellin-tail form against direct Fourier quadrature of the product",
        axes: &["n", "u", "v", "t"],
        default_grid: g_qn,
        tolerance: Tolerance::rel(1e-6),
        gate: Gate::Residual,
        metrics: &[],
        eval: qn,
    },
    SuiteDef {
        id: "qn_continued",
        anchor: "q_n continuation",
        summary: "continued q_n(u,v) for 0 < Re u, Re v against direct Fourier quadrature",
        axes: &["n", "u", "v", "t"],
        default_grid: g_qn_cont,
        tolerance: Tolerance::rel(1e-6),
        gate: Gate::Residual,
        metrics: &[],
        eval: qn_cont,
    },
    SuiteDef {
        id: "highfreq_tail",
        anchor: "Lemma 10",
        summary: "truncated product transform for |n| > t/2pi against t^(1/2) / |n - t/2pi|",
        axes: &["n", "sigma", "t", "eta"],
        default_grid: g_highfreq,
        tolerance: Tolerance::abs(1.0),
        gate: Gate::Metric("ratio"),
        metrics: &["ratio"],
        eval: highfreq,
    },
    SuiteDef {
        id: "parseval_second",
        anchor: "Parseval",
        summary: "int_0^1 |zeta1(s,a)|^2 da against sum |a_n|^2 with certified tail (n = cutoff)",
        axes: &["sigma", "t", "n"],
        default_grid: g_parseval2,
        tolerance: Tolerance::rel(1e-4),
        gate: Gate::Residual,
        metrics: &["tail"],
        eval: parseval2,
    },
    SuiteDef {
        id: "parseval_fourth",
        anchor: "Parseval, fourth moment",
        summary: "int_0^1 |zeta1(u,a)|^4 da against sum |q_n(u,conj u)|^2 with certified tail",
        axes: &["sigma", "t", "eta", "n"],
        default_grid: g_parseval4,
        tolerance: Tolerance::rel(1e-3),
        gate: Gate::Residual,
        metrics: &["tail", "tail_bound"],
        eval: parseval4,
    },
    SuiteDef {
        id: "theorem2",
        anchor: "Thm 2",
        summary: "|zeta(1/2+it)|^4 against t^(1/2) times the truncated transform sum",
        axes: &["t", "eta"],
        default_grid: g_theorem2,
        tolerance: Tolerance::abs(10.0),
        gate: Gate::Metric("ratio"),
        metrics: &["sum", "ratio"],
        eval: theorem2,
    },
    SuiteDef {
        id: "closed_form",
        anchor: "special-function closed forms",
        summary: "classical closed-form values and exact symmetries; n indexes the case table",
        axes: &["n"],
        default_grid: g_closed,
        tolerance: Tolerance::abs(1.0),
        gate: Gate::Metric("tol_ratio"),
        metrics: &["tol", "tol_ratio"],
        eval: closed_form::evaluate,
    },
    SuiteDef {
        id: "oracle_precision",
        anchor: "double-double oracle",
        summary: "standard precision zeta1 and Gamma within their reported error of double-double values; n seeds the point",
        axes: &["n"],
        default_grid: g_oracle,
        tolerance: Tolerance::abs(1.0),
        gate: Gate::Metric("err_ratio"),
        metrics: &["zeta1_error", "gamma_error", "err_ratio"],
        eval: oracle::evaluate,
    },
];
