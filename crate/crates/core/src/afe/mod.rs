//! Approximate functional equations, Dirichlet-kernel projections, the weak
//! integral form of the approximate functional equation, power means and the
//! pointwise bound of `|zeta(1/2 + it)|` by `I_k(t)`.

use alloc::vec::Vec;

use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::quadrature::{oscillatory_breaks, try_integrate_with_breaks, OscSpec, QuadResult};
use crate::report::{Cost, IdentityReport, Params};
use crate::special::{chi, dirichlet_kernel, hurwitz_zeta1, riemann_zeta, rpow};
use crate::sum::ComplexSum;
use crate::{c64, C64, PI, TAU};

/// Magnitude of the error term of an asymptotic formula at `s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AfeResidual {
    pub s: C64,
    pub exact: C64,
    pub approximation: C64,
    pub residual: f64,
    /// Residual divided by the claimed order.
    pub scaled: f64,
}

impl AfeResidual {
    fn new(s: C64, exact: C64, approximation: C64, order: f64) -> Self {
        let residual = (exact - approximation).norm();
        Self { s, exact, approximation, residual, scaled: residual / order }
    }
}

/// A power mean `I_k(t)` or `J_k(T)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerMean {
    pub k: u32,
    pub t: f64,
    pub value: f64,
    pub error: f64,
    pub evaluations: usize,
}

/// `N = floor(sqrt(t / 2 pi))`.
pub fn kernel_length(t: f64) -> u64 {
    (t.abs() / TAU).sqrt().floor() as u64
}

fn check_strip(function: &'static str, s: C64, t_min: f64) -> Result<()> {
    if !(s.re > 0.0 && s.re < 1.0) {
        return Err(Error::Domain { function, reason: "requires 0 < sigma < 1" });
    }
    if !(s.im >= t_min) {
        return Err(Error::Domain { function, reason: "t below the asymptotic range" });
    }
    Ok(())
}

fn power_sum(n: u64, shift: f64, exponent: C64) -> C64 {
    let mut acc = ComplexSum::new();
    for k in 1..=n {
        acc.add(rpow(k as f64 + shift, exponent));
    }
    acc.value()
}

/// `zeta(s) - sum_{n<=N} n^-s - chi(s) sum_{n<=N} n^{s-1}`, scaled by `t^{sigma/2}`.
pub fn afe_zeta_residual(s: C64, cfg: &EvalConfig) -> Result<AfeResidual> {
    check_strip("afe_zeta_residual", s, 10.0)?;
    let n = kernel_length(s.im);
    let approx = power_sum(n, 0.0, -s) + chi(s)? * power_sum(n, 0.0, s - 1.0);
    Ok(AfeResidual::new(s, riemann_zeta(s, cfg)?, approx, s.im.powf(-s.re / 2.0)))
}

/// Hurwitz analogue `zeta1(s,a) - sum (n+a)^-s - chi(s) sum e^{-2 pi i n a} n^{s-1}`.
pub fn afe_hurwitz_residual(s: C64, alpha: f64, cfg: &EvalConfig) -> Result<AfeResidual> {
    check_strip("afe_hurwitz_residual", s, 10.0)?;
    if !(alpha >= 0.0 && alpha < 1.0) {
        return Err(Error::Domain { function: "afe_hurwitz_residual", reason: "requires 0 <= alpha < 1" });
    }
    let n = kernel_length(s.im);
    let x = chi(s)?;
    let mut second = ComplexSum::new();
    for k in 1..=n {
        let kf = k as f64;
        second.add(c64(0.0, -TAU * kf * alpha).exp() * rpow(kf, s - 1.0));
    }
    let approx = power_sum(n, alpha, -s) + x * second.value();
    Ok(AfeResidual::new(s, hurwitz_zeta1(s, alpha, cfg)?, approx, s.im.powf(-s.re / 2.0)))
}

fn kernel_breaks(n: u64, extra_rate: f64, cfg: &EvalConfig) -> Result<Vec<f64>> {
    let osc = OscSpec::new(n.max(1) as f64, 0.0).with_companion(extra_rate, 1.0);
    oscillatory_breaks(&osc, 0.0, 1.0, cfg.max_subdivisions)
}

/// `sum_{n<=N} n^z` against `int_0^1 B_N(a) sum_{m<=N} e^{-2 pi i m a} m^z da`,
/// or the mirrored form with `B_N(-a)` and `e^{+2 pi i m a}`.
pub fn projection_identity_check(z: C64, n: u64, mirrored: bool, cfg: &EvalConfig) -> Result<IdentityReport> {
    let lhs = power_sum(n, 0.0, z);
    let pw: Vec<C64> = (1..=n).map(|m| rpow(m as f64, z)).collect();
    let sign = if mirrored { -1.0 } else { 1.0 };
    let breaks = kernel_breaks(2 * n, 0.0, cfg)?;
    let r = try_integrate_with_breaks(
        |a| {
            let mut acc = ComplexSum::new();
            for (m, p) in pw.iter().enumerate() {
                acc.add(c64(0.0, -sign * TAU * (m + 1) as f64 * a).exp() * p);
            }
            Ok(dirichlet_kernel(n, sign * a) * acc.value())
        },
        &breaks,
        cfg,
    )?;
    let id = if mirrored { "projection_mirrored" } else { "projection" };
    Ok(IdentityReport::new(id, Params::new().with("z", z).with("N", n), lhs, r.value, Cost { evaluations: r.evaluations }))
}

/// `int_0^1 B_N(a) e^{-2 pi i m a} da`, which is 1 for `1 <= m <= N` and 0 otherwise.
pub fn kernel_coefficient(n: u64, m: i64, cfg: &EvalConfig) -> Result<C64> {
    let breaks = kernel_breaks(n + m.unsigned_abs(), 0.0, cfg)?;
    try_integrate_with_breaks(
        |a| Ok(dirichlet_kernel(n, a) * c64(0.0, -TAU * m as f64 * a).exp()),
        &breaks,
        cfg,
    )
    .map(|r| r.value)
}

/// `int_0^1 |B_N(a)|^p da`.
pub fn kernel_norm_power(n: u64, p: f64, cfg: &EvalConfig) -> Result<f64> {
    if n == 0 || !(p > 0.0) {
        return Err(Error::Domain { function: "kernel_norm_power", reason: "requires N >= 1 and p > 0" });
    }
    // zeros of B_N sit at k / N
    let breaks: Vec<f64> = (0..=n).map(|k| k as f64 / n as f64).collect();
    let r = try_integrate_with_breaks(|a| Ok(c64(dirichlet_kernel(n, a).norm().powf(p), 0.0)), &breaks, cfg)?;
    Ok(r.value.re)
}

fn kernel_integral<F>(n: u64, mirrored: bool, rate: f64, mut f: F, cfg: &EvalConfig) -> Result<QuadResult>
where
    F: FnMut(f64) -> Result<C64>,
{
    let sign = if mirrored { -1.0 } else { 1.0 };
    let breaks = kernel_breaks(n, rate, cfg)?;
    try_integrate_with_breaks(|a| Ok(dirichlet_kernel(n, sign * a) * f(a)?), &breaks, cfg)
}

/// Pieces of the weak approximate functional equation at `s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeakAfeTerms {
    /// `int B_N(a) zeta1(s, a) da`
    pub first: C64,
    /// `int B_N(-a) zeta1(1 - s, a) da`
    pub second: C64,
    /// `int B_N(a) sum_{n<=N} (n + a)^-s da`
    pub correction: C64,
    /// `int B_N(-a) sum_{n<=N} (n + a)^{s-1} da`
    pub mirrored_correction: C64,
    pub chi: C64,
    pub evaluations: usize,
}

/// All four integrals of the weak approximate functional equation.
pub fn weak_afe_terms(s: C64, cfg: &EvalConfig) -> Result<WeakAfeTerms> {
    let n = kernel_length(s.im);
    let t = s.im.abs();
    let one = c64(1.0, 0.0);
    let i1 = kernel_integral(n, false, t, |a| hurwitz_zeta1(s, a, cfg), cfg)?;
    let i2 = kernel_integral(n, true, t, |a| hurwitz_zeta1(one - s, a, cfg), cfg)?;
    let l1 = kernel_integral(n, false, t, |a| Ok(power_sum(n, a, -s)), cfg)?;
    let l2 = kernel_integral(n, true, t, |a| Ok(power_sum(n, a, s - 1.0)), cfg)?;
    Ok(WeakAfeTerms {
        first: i1.value,
        second: i2.value,
        correction: l1.value,
        mirrored_correction: l2.value,
        chi: chi(s)?,
        evaluations: i1.evaluations + i2.evaluations + l1.evaluations + l2.evaluations,
    })
}

/// `zeta(s)` against the two kernel integrals; scaled by `t^{sigma/2} / log t`.
pub fn weak_afe_residual(s: C64, cfg: &EvalConfig) -> Result<AfeResidual> {
    check_strip("weak_afe_residual", s, 20.0)?;
    let w = weak_afe_terms(s, cfg)?;
    let approx = w.first + w.chi * w.second;
    Ok(AfeResidual::new(s, riemann_zeta(s, cfg)?, approx, s.im.powf(-s.re / 2.0) * s.im.ln()))
}

/// The same residual for the four-integral form, which subtracts both corrections.
pub fn weak_afe_four_integral_residual(s: C64, cfg: &EvalConfig) -> Result<AfeResidual> {
    check_strip("weak_afe_four_integral_residual", s, 20.0)?;
    let w = weak_afe_terms(s, cfg)?;
    let approx = w.first + w.chi * w.second - w.correction - w.chi * w.mirrored_correction;
    Ok(AfeResidual::new(s, riemann_zeta(s, cfg)?, approx, s.im.powf(-s.re / 2.0) * s.im.ln()))
}

/// The two explicit sums approximating `int_0^1 B_N(a) sum (n+a)^-s da`.
pub fn lemma3_sums(s: C64) -> C64 {
    let n = kernel_length(s.im);
    let t = s.im;
    let nf = n as f64;
    let mut a = ComplexSum::new();
    let mut b = ComplexSum::new();
    for k in 1..=n {
        let kf = k as f64;
        a.add(c64(1.0 / (t / (TAU * nf) - kf), 0.0));
        b.add(c64(1.0 / (t / TAU - kf), 0.0));
    }
    c64(0.0, 1.0) / (TAU * rpow(nf, s)) * a.value() + b.value() / c64(0.0, TAU)
}

/// `int_N^{N+1} B_N(a) a^-s da`.
pub fn lemma3_boundary_piece(s: C64, cfg: &EvalConfig) -> Result<C64> {
    let n = kernel_length(s.im);
    let nf = n as f64;
    let osc = OscSpec::new(nf, 0.0).with_companion(s.im, 0.0);
    let breaks = oscillatory_breaks(&osc, nf, nf + 1.0, cfg.max_subdivisions)?;
    try_integrate_with_breaks(|a| Ok(dirichlet_kernel(n, a) * rpow(a, -s)), &breaks, cfg).map(|r| r.value)
}

/// Direct quadrature of `int_0^1 B_N(a) sum_{n<=N} (n + a)^-s da` against the
/// two explicit sums plus the boundary piece over `[N, N+1]`.
///
/// Metrics: `scaled` is the residual times `t^{(1+sigma)/2}`, `boundary` the
/// size of the boundary piece and `boundary_scaled` that size times
/// `t^{sigma/2} / log t`.
pub fn lemma3_integral(s: C64, cfg: &EvalConfig) -> Result<(C64, IdentityReport)> {
    check_strip("lemma3_integral", s, 20.0)?;
    let n = kernel_length(s.im);
    let lhs = kernel_integral(n, false, s.im, |a| Ok(power_sum(n, a, -s)), cfg)?;
    let sums = lemma3_sums(s);
    let boundary = lemma3_boundary_piece(s, cfg)?;
    let t = s.im;
    let report = IdentityReport::new("lemma3", Params::new().with("s", s), lhs.value, sums + boundary, Cost { evaluations: lhs.evaluations });
    let scaled = report.abs_residual * t.powf((1.0 + s.re) / 2.0);
    let report = report
        .with_metric("scaled", scaled)
        .with_metric("boundary", boundary.norm())
        .with_metric("boundary_scaled", boundary.norm() * t.powf(s.re / 2.0) / t.ln())
        .with_metric("sums_scaled", sums.norm() * t.powf(s.re / 2.0) / t.ln());
    Ok((lhs.value, report))
}

/// `int_0^1 |zeta1(s, a)|^{2k} da` for any `s`, with panels of at most half a
/// period of `(n + a)^{-it}`.
pub fn hurwitz_power_mean(s: C64, k: u32, cfg: &EvalConfig) -> Result<PowerMean> {
    if k == 0 {
        return Err(Error::Domain { function: "hurwitz_power_mean", reason: "k must be positive" });
    }
    let panels = ((s.im.abs() / PI).ceil() as usize + 1).max(200);
    let breaks: Vec<f64> = (0..=panels).map(|j| j as f64 / panels as f64).collect();
    let r = try_integrate_with_breaks(|a| Ok(c64(hurwitz_zeta1(s, a, cfg)?.norm_sqr().powi(k as i32), 0.0)), &breaks, cfg)?;
    Ok(PowerMean { k, t: s.im, value: r.value.re, error: r.error, evaluations: r.evaluations })
}

/// `I_k(t) = int_0^1 |zeta1(1/2 + it, a)|^{2k} da`.
pub fn power_mean_ik(k: u32, t: f64, cfg: &EvalConfig) -> Result<PowerMean> {
    hurwitz_power_mean(c64(0.5, t), k, cfg)
}

/// `J_k(T) = (1/T) int_0^T |zeta(1/2 + it)|^{2k} dt`.
pub fn power_mean_jk(k: u32, big_t: f64, cfg: &EvalConfig) -> Result<PowerMean> {
    if k == 0 || !(big_t > 0.0) {
        return Err(Error::Domain { function: "power_mean_jk", reason: "requires k >= 1 and T > 0" });
    }
    let panels = ((big_t * 2.0).ceil() as usize).max(8);
    let breaks: Vec<f64> = (0..=panels).map(|j| big_t * j as f64 / panels as f64).collect();
    let r = try_integrate_with_breaks(
        |t| Ok(c64(riemann_zeta(c64(0.5, t), cfg)?.norm_sqr().powi(k as i32), 0.0)),
        &breaks,
        cfg,
    )?;
    Ok(PowerMean { k, t: big_t, value: r.value.re / big_t, error: r.error / big_t, evaluations: r.evaluations })
}

/// `S_1(sigma, t, a) = sum_{1 <= n < t / 2 pi} e^{-2 pi i n a} n^{s-1}`.
pub fn s1_sum(sigma: f64, t: f64, alpha: f64) -> C64 {
    let s = c64(sigma, t);
    let limit = t / TAU;
    let mut acc = ComplexSum::new();
    let mut n = 1u64;
    while (n as f64) < limit {
        let nf = n as f64;
        acc.add(c64(0.0, -TAU * nf * alpha).exp() * rpow(nf, s - 1.0));
        n += 1;
    }
    acc.value()
}

/// One point of the pointwise bound `|zeta(1/2+it)| <~ t^{1/4k} I_k(t)^{1/2k}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Theorem1Record {
    pub k: u32,
    pub t: f64,
    pub zeta_abs: f64,
    pub ik: f64,
    pub ratio: f64,
}

/// Ratios `|zeta(1/2+it)| / (t^{1/4k} I_k(t)^{1/2k})` over a grid.
pub fn theorem1_check(k: u32, t_grid: &[f64], cfg: &EvalConfig) -> Result<Vec<Theorem1Record>> {
    let mut out = Vec::with_capacity(t_grid.len());
    for &t in t_grid {
        let z = riemann_zeta(c64(0.5, t), cfg)?.norm();
        let ik = power_mean_ik(k, t, cfg)?.value;
        let kf = k as f64;
        let ratio = z / (t.powf(1.0 / (4.0 * kf)) * ik.powf(1.0 / (2.0 * kf)));
        out.push(Theorem1Record { k, t, zeta_abs: z, ik, ratio });
    }
    Ok(out)
}

/// Least-squares slope of `log y` against `log x`.
pub fn loglog_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len().min(ys.len()) as f64;
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for (x, y) in lx.iter().zip(&ly) {
        num += (x - mx) * (y - my);
        den += (x - mx) * (x - mx);
    }
    num / den
}
