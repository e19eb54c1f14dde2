use alloc::vec::Vec;

use super::unit_power_integral;
use crate::afe::power_mean_ik;
use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::quadrature::{try_integrate_oscillatory, try_integrate_semi_infinite, OscSpec, QuadResult};
use crate::report::{Cost, IdentityReport, Params};
use crate::special::{hurwitz_zeta1, ln_gamma, riemann_zeta, rpow, zeta1_increment};
use crate::sum::ComplexSum;
use crate::{c64, C64, EULER_GAMMA, TAU};

fn one() -> C64 {
    c64(1.0, 0.0)
}

fn is_one(z: C64) -> bool {
    z.re == 1.0 && z.im == 0.0
}

// Gamma(1-v) Gamma(u+v-1) zeta(u+v-1) / Gamma(u), by continuation wherever defined.
fn mellin_continued(u: C64, v: C64, cfg: &EvalConfig) -> Result<C64> {
    let w = u + v - 1.0;
    if is_one(w) {
        return Err(Error::Pole { function: "mellin_tail", at: u + v });
    }
    let g = (ln_gamma(one() - v)? + ln_gamma(w)? - ln_gamma(u)?).exp();
    Ok(g * riemann_zeta(w, cfg)?)
}

/// Closed form of `int_0^oo a^{-v} zeta1(u, a) da`.
pub fn mellin_tail_closed_form(u: C64, v: C64, cfg: &EvalConfig) -> Result<C64> {
    if !(u.re > 1.0 && v.re < 1.0 && (u + v).re > 2.0) {
        return Err(Error::Domain { function: "mellin_tail_closed_form", reason: "requires Re u > 1, Re v < 1, Re(u+v) > 2" });
    }
    mellin_continued(u, v, cfg)
}

/// `int_0^oo a^{-v} zeta1(u, a) da` by quadrature, split at 1.
pub fn mellin_tail_quadrature(u: C64, v: C64, cfg: &EvalConfig) -> Result<QuadResult> {
    if !(u.re > 1.0 && v.re < 1.0 && (u + v).re > 2.0) {
        return Err(Error::Domain { function: "mellin_tail_quadrature", reason: "requires Re u > 1, Re v < 1, Re(u+v) > 2" });
    }
    let head = unit_power_integral(|a| hurwitz_zeta1(u, a, cfg), v, u.im.abs(), cfg)?;
    let tail = try_integrate_semi_infinite(|a| Ok(rpow(a, -v) * hurwitz_zeta1(u, a, cfg)?), 1.0, (u + v).re - 1.0, cfg)?;
    Ok(head.combine(tail))
}

/// `int_0^1 a^{1-p} zeta1(q+1, a) da` for `Re p < 2`.
fn unit_shifted(p: C64, q: C64, cfg: &EvalConfig) -> Result<QuadResult> {
    unit_power_integral(|a| hurwitz_zeta1(q + 1.0, a, cfg), p - 1.0, q.im.abs() + p.im.abs(), cfg)
}

/// `int_0^1 a^{-v} zeta1(u, a) da`, regularised at `a = 0` when `1 <= Re v < 2`.
fn unit_weighted(u: C64, v: C64, cfg: &EvalConfig) -> Result<QuadResult> {
    let rate = u.im.abs() + v.im.abs();
    if v.re < 1.0 {
        return unit_power_integral(|a| hurwitz_zeta1(u, a, cfg), v, rate, cfg);
    }
    let z0 = hurwitz_zeta1(u, 0.0, cfg)?;
    let r = unit_power_integral(|a| Ok(zeta1_increment(u, a, cfg)? / a), v - 1.0, rate, cfg)?;
    Ok(QuadResult { value: r.value + z0 / (one() - v), ..r })
}

/// Integration-by-parts identity on the unit interval, with a finite-part
/// comparison at `v = 1`.
pub fn unit_interval_recursion(u: C64, v: C64, cfg: &EvalConfig) -> Result<IdentityReport> {
    if is_one(u) || is_one(u + 1.0) {
        return Err(Error::Pole { function: "unit_interval_recursion", at: u });
    }
    if !(v.re < 2.0) {
        return Err(Error::Domain { function: "unit_interval_recursion", reason: "requires Re v < 2" });
    }
    let params = Params::new().with("u", u).with("v", v);
    let rate = u.im.abs() + v.im.abs() + 1.0;
    if (v - 1.0).norm() < 1e-8 {
        // finite parts: int (zeta1(u,a) - zeta(u)) / a  =  u int ln(a) zeta1(u+1, a)
        let lhs = unit_power_integral(|a| Ok(zeta1_increment(u, a, cfg)? / a), c64(0.0, 0.0), rate, cfg)?;
        let r = unit_power_integral(|a| Ok(hurwitz_zeta1(u + 1.0, a, cfg)? * a.ln()), c64(0.0, 0.0), rate, cfg)?;
        let rhs = u * r.value;
        return Ok(IdentityReport::new(
            "unit_interval_limit",
            params,
            lhs.value,
            rhs,
            Cost { evaluations: lhs.evaluations + r.evaluations },
        ));
    }
    let lhs = unit_weighted(u, v, cfg)?;
    let j = unit_shifted(v, u, cfg)?;
    let zu = riemann_zeta(u, cfg)?;
    let rhs = ((zu - 1.0) + u * j.value) / (one() - v);
    Ok(IdentityReport::new("unit_interval", params, lhs.value, rhs, Cost { evaluations: lhs.evaluations + j.evaluations }))
}

fn katsurada_rhs(u: C64, v: C64, cfg: &EvalConfig) -> Result<(C64, usize)> {
    let w = u + v - 1.0;
    let zw = riemann_zeta(w, cfg)?;
    let lg_w = ln_gamma(w)?;
    let bracket = (ln_gamma(one() - v)? - ln_gamma(u)?).exp() + (ln_gamma(one() - u)? - ln_gamma(v)?).exp();
    let ju = unit_shifted(v, u, cfg)?;
    let jv = unit_shifted(u, v, cfg)?;
    let mut acc = ComplexSum::new();
    acc.add(one() / w);
    acc.add(lg_w.exp() * zw * bracket);
    acc.add((riemann_zeta(u, cfg)? - 1.0) / (v - 1.0));
    acc.add((riemann_zeta(v, cfg)? - 1.0) / (u - 1.0));
    acc.add(u / (v - 1.0) * ju.value);
    acc.add(v / (u - 1.0) * jv.value);
    Ok((acc.value(), ju.evaluations + jv.evaluations))
}

/// Exact mean-square formula for `int_0^1 zeta1(u, a) zeta1(v, a) da`.
pub fn verify_katsurada(u: C64, v: C64, cfg: &EvalConfig) -> Result<IdentityReport> {
    if is_one(u + v - 1.0) {
        return Err(Error::Pole { function: "verify_katsurada", at: u + v });
    }
    if is_one(u) || is_one(v) {
        return Err(Error::Pole { function: "verify_katsurada", at: if is_one(u) { u } else { v } });
    }
    if !(u.re > 1.0 && u.re < 2.0 && v.re > 1.0 && v.re < 2.0) {
        return Err(Error::Domain { function: "verify_katsurada", reason: "direct mode needs 1 < Re u, Re v < 2" });
    }
    let osc = OscSpec::new(0.0, 0.0).with_companion(u.im.abs() + v.im.abs(), 1.0);
    let lhs = try_integrate_oscillatory(|a| Ok(hurwitz_zeta1(u, a, cfg)? * hurwitz_zeta1(v, a, cfg)?), &osc, 0.0, 1.0, cfg)?;
    let (rhs, evals) = katsurada_rhs(u, v, cfg)?;
    let params = Params::new().with("u", u).with("v", v);
    Ok(IdentityReport::new("katsurada", params, lhs.value, rhs, Cost { evaluations: lhs.evaluations + evals }))
}

/// Both tails `int_1^oo a^{-v} zeta1(u)` by direct quadrature against the
/// closed-form Mellin transform minus the unit-interval recursion.
pub fn katsurada_split_check(u: C64, v: C64, cfg: &EvalConfig) -> Result<IdentityReport> {
    let mut lhs = ComplexSum::new();
    let mut rhs = ComplexSum::new();
    let mut evals = 0;
    for (a, b) in [(u, v), (v, u)] {
        let direct = try_integrate_semi_infinite(|x| Ok(rpow(x, -b) * hurwitz_zeta1(a, x, cfg)?), 1.0, (a + b).re - 1.0, cfg)?;
        let j = unit_shifted(b, a, cfg)?;
        let unit = ((riemann_zeta(a, cfg)? - 1.0) + a * j.value) / (one() - b);
        lhs.add(direct.value);
        rhs.add(mellin_continued(a, b, cfg)? - unit);
        evals += direct.evaluations + j.evaluations;
    }
    let params = Params::new().with("u", u).with("v", v);
    Ok(IdentityReport::new("katsurada_split", params, lhs.value(), rhs.value(), Cost { evaluations: evals }))
}

/// `I_1(t)` against `log(t / 2 pi) + gamma`; metric `diff_t2` is `(I_1 - rhs) t^2`.
pub fn i1_asymptotic_check(t_grid: &[f64], cfg: &EvalConfig) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::with_capacity(t_grid.len());
    for &t in t_grid {
        if !(t >= 20.0) {
            return Err(Error::Domain { function: "i1_asymptotic_check", reason: "requires t >= 20" });
        }
        let i1 = power_mean_ik(1, t, cfg)?;
        let rhs = (t / TAU).ln() + EULER_GAMMA;
        let diff = i1.value - rhs;
        out.push(
            IdentityReport::new("i1_asymptotic", Params::new().with("t", t), c64(i1.value, 0.0), c64(rhs, 0.0), Cost { evaluations: i1.evaluations })
                .with_metric("diff_t2", diff * t * t),
        );
    }
    Ok(out)
}

/// `sum_{m >= 1} 1 / (m (m+1)^u) = sum_{j >= 0} (zeta(u+1+j) - 1)`.
pub fn remark_219_sum(u: C64, cfg: &EvalConfig) -> Result<C64> {
    let mut acc = ComplexSum::new();
    for j in 0..200 {
        // zeta(w) - 1 = zeta1(w, 1)
        let term = hurwitz_zeta1(u + (1 + j) as f64, 1.0, cfg)?;
        acc.add(term);
        if term.norm() < 1e-18 * acc.value().norm() {
            break;
        }
    }
    Ok(acc.value())
}

/// `int_0^1 a^{1-v} zeta1(u+1, a) da` against `(1 / i t) sum 1 / (m (m+1)^u)`
/// with `t = Im u`; metric `residual_t2` is the residual times `t^2`.
pub fn remark_219_check(u: C64, v: C64, cfg: &EvalConfig) -> Result<IdentityReport> {
    if !(v.re > 0.0 && v.re < 2.0) {
        return Err(Error::Domain { function: "remark_219_check", reason: "requires 0 < Re v < 2" });
    }
    let t = u.im;
    if t == 0.0 {
        return Err(Error::Domain { function: "remark_219_check", reason: "requires t != 0" });
    }
    let lhs = unit_shifted(v, u, cfg)?;
    let rhs = remark_219_sum(u, cfg)? / c64(0.0, t);
    let r = IdentityReport::new("remark_219", Params::new().with("u", u).with("v", v), lhs.value, rhs, Cost { evaluations: lhs.evaluations });
    let res = r.abs_residual;
    Ok(r.with_metric("residual_t2", res * t * t).with_metric("lhs_t", lhs.value.norm() * t.abs()))
}

