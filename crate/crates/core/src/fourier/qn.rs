use alloc::vec::Vec;

use super::grid::SpectralGrid;
use super::{FourierCoeffSet, FourierMode};
use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::quadrature::{try_integrate_oscillatory, OscSpec, QuadResult};
use crate::special::{
    bernoulli_2k, em_bound, exp_integral_tail, fourier_coeff_a, hurwitz_zeta1,
    hurwitz_zeta1_remainder, pochhammer, rpow,
};
use crate::sum::ComplexSum;
use crate::{c64, C64, TAU};

/// `coef * a^(-w)`.
#[derive(Debug, Clone, Copy)]
struct PowerTerm {
    coef: C64,
    w: C64,
}

/// Large-`a` expansion of `a^-v zeta1(u, a)`, or of `a^-v R(u, a)` when the
/// two leading terms are dropped.
fn expansion(u: C64, v: C64, p: usize, leading: bool) -> Vec<PowerTerm> {
    let mut out = Vec::with_capacity(p + 2);
    if leading {
        out.push(PowerTerm { coef: c64(1.0, 0.0) / (u - 1.0), w: u + v - 1.0 });
        out.push(PowerTerm { coef: c64(-0.5, 0.0), w: u + v });
    }
    let mut fact = 1.0;
    for k in 1..=p {
        fact *= ((2 * k - 1) * 2 * k) as f64;
        let coef = pochhammer(u, 2 * k - 1) * (bernoulli_2k(k) / fact);
        out.push(PowerTerm { coef, w: u + v + (2 * k - 1) as f64 });
    }
    out
}

/// `int_x^oo sum_j c_j a^(-w_j) e^{-2 pi i n a} da`.
fn expansion_tail(terms: &[PowerTerm], n: i64, x: f64, cfg: &EvalConfig) -> Result<QuadResult> {
    let mut acc = QuadResult::ZERO;
    for term in terms {
        let scale = term.coef * rpow(x, c64(1.0, 0.0) - term.w);
        let piece = if n == 0 {
            if !(term.w.re > 1.0) {
                return Err(Error::Divergence { decay: term.w.re });
            }
            QuadResult { value: scale / (term.w - 1.0), error: 0.0, evaluations: 0 }
        } else {
            exp_integral_tail(n as f64 * x, term.w, cfg)?.scale(scale)
        };
        acc = acc.combine(piece);
    }
    Ok(acc)
}

/// Smallest cut (from `lower` upwards) past which the expansion of
/// `zeta1(u, .)` is accurate to working precision.
fn asymptotic_cut(u: C64, lower: f64, p: usize) -> f64 {
    let mut x = lower.max(2.0);
    for _ in 0..200 {
        let first = (u / 12.0).norm() * x.powf(-u.re - 1.0);
        if em_bound(u, x, p) <= 1e-16 * first {
            break;
        }
        x *= 1.25;
    }
    x
}

fn amplitude(mode: FourierMode, u: C64, v: C64, a: f64, cfg: &EvalConfig) -> Result<C64> {
    let z = match mode {
        FourierMode::Direct => hurwitz_zeta1(u, a, cfg)?,
        FourierMode::Continued => hurwitz_zeta1_remainder(u, a, cfg)?,
    };
    Ok(rpow(a, -v) * z)
}

fn cut_and_order(u: C64, cfg: &EvalConfig) -> (f64, usize) {
    let p = (cfg.bernoulli_order / 2).max(1);
    (asymptotic_cut(u, 1.0, p), p)
}

/// `int_1^oo a^-v zeta1(u, a) e^{-2 pi i n a} da` (direct) or the same with
/// `zeta1` replaced by its regularised remainder (continued).
fn half_integral(n: i64, u: C64, v: C64, mode: FourierMode, cfg: &EvalConfig) -> Result<QuadResult> {
    let (x, p) = cut_and_order(u, cfg);
    let osc = OscSpec::new(-n as f64, 0.0).with_companion(u.im.abs() + v.im.abs(), 0.0);
    let head = try_integrate_oscillatory(|a| amplitude(mode, u, v, a, cfg), &osc, 1.0, x, cfg)?;
    let tail = expansion_tail(&expansion(u, v, p, mode == FourierMode::Direct), n, x, cfg)?;
    Ok(head.combine(tail))
}

fn check_continued(u: C64, v: C64) -> Result<()> {
    if !(u.re > 0.0 && v.re > 0.0) {
        return Err(Error::Domain { function: "qn_continued", reason: "requires Re u > 0 and Re v > 0" });
    }
    for z in [u, v] {
        if z.re == 1.0 && z.im == 0.0 {
            return Err(Error::Pole { function: "qn_continued", at: z });
        }
    }
    Ok(())
}

/// `q_n(u, v) = a_n(u+v) + int_1^oo zeta1(u,a) a^-v e^{-2 pi i n a} da + (u <-> v)`
/// for `Re u, Re v > 1`.
pub fn qn_direct(n: i64, u: C64, v: C64, cfg: &EvalConfig) -> Result<C64> {
    if !(u.re > 1.0 && v.re > 1.0) {
        return Err(Error::Divergence { decay: u.re.min(v.re) });
    }
    if n < 0 && v == u.conj() {
        return qn_direct(-n, u, v, cfg).map(|q| q.conj());
    }
    let a = fourier_coeff_a(n, u + v, cfg)?;
    Ok(a + half_integral(n, u, v, FourierMode::Direct, cfg)?.value + half_integral(n, v, u, FourierMode::Direct, cfg)?.value)
}

/// Analytic continuation of `q_n(u, v)` to `Re u, Re v > 0` through the
/// regularised integrands `a^-v zeta1(u,a) - a^(1-u-v)/(u-1) + a^(-u-v)/2`.
pub fn qn_continued(n: i64, u: C64, v: C64, cfg: &EvalConfig) -> Result<C64> {
    check_continued(u, v)?;
    if n < 0 && v == u.conj() {
        return qn_continued(-n, u, v, cfg).map(|q| q.conj());
    }
    let one = c64(1.0, 0.0);
    let a = fourier_coeff_a(n, u + v - 1.0, cfg)?;
    let lead = (one / (u - 1.0) + one / (v - 1.0)) * a;
    Ok(lead
        + half_integral(n, u, v, FourierMode::Continued, cfg)?.value
        + half_integral(n, v, u, FourierMode::Continued, cfg)?.value)
}

/// Continued form with both regularised integrals stopped at `t/2pi + eta`,
/// `t = |Im u|`. Differs from [`qn_continued`] by `O(t^(1-2 sigma) / n)`.
pub fn qn_continued_truncated(n: i64, u: C64, v: C64, eta: f64, cfg: &EvalConfig) -> Result<C64> {
    check_continued(u, v)?;
    check_eta(eta)?;
    let upper = u.im.abs() / TAU + eta;
    let one = c64(1.0, 0.0);
    let lead = (one / (u - 1.0) + one / (v - 1.0)) * fourier_coeff_a(n, u + v - 1.0, cfg)?;
    let osc = OscSpec::new(-n as f64, 0.0).with_companion(u.im.abs() + v.im.abs(), 0.0);
    let first = try_integrate_oscillatory(|a| amplitude(FourierMode::Continued, u, v, a, cfg), &osc, 1.0, upper, cfg)?;
    let second = try_integrate_oscillatory(|a| amplitude(FourierMode::Continued, v, u, a, cfg), &osc, 1.0, upper, cfg)?;
    Ok(lead + first.value + second.value)
}

/// `int_1^upper a^-v zeta1(u, a) e^{-2 pi i n a} da`.
pub fn truncated_product_integral(n: i64, u: C64, v: C64, upper: f64, cfg: &EvalConfig) -> Result<QuadResult> {
    if !(upper >= 1.0) {
        return Err(Error::Domain { function: "truncated_product_integral", reason: "upper limit below 1" });
    }
    let osc = OscSpec::new(-n as f64, 0.0).with_companion(u.im.abs() + v.im.abs(), 0.0);
    try_integrate_oscillatory(|a| amplitude(FourierMode::Direct, u, v, a, cfg), &osc, 1.0, upper, cfg)
}

/// The unregularised truncated form: the two integrals of
/// `a^-v zeta1(u, a)` and `a^-u zeta1(v, a)` over `[1, t/2pi + eta]`.
pub fn qn_truncated(n: i64, u: C64, v: C64, eta: f64, cfg: &EvalConfig) -> Result<C64> {
    check_eta(eta)?;
    let upper = u.im.abs() / TAU + eta;
    Ok(truncated_product_integral(n, u, v, upper, cfg)?.value + truncated_product_integral(n, v, u, upper, cfg)?.value)
}

pub(crate) fn check_eta(eta: f64) -> Result<()> {
    if !(eta > 0.0 && eta.is_finite()) {
        return Err(Error::Domain { function: "fourier", reason: "eta must be positive" });
    }
    Ok(())
}

/// Direct quadrature of `int_0^1 zeta1(u,a) zeta1(v,a) e^{-2 pi i n a} da`.
pub fn qn_fourier_quadrature(n: i64, u: C64, v: C64, cfg: &EvalConfig) -> Result<QuadResult> {
    let osc = OscSpec::new(-n as f64, 0.0).with_companion(u.im.abs() + v.im.abs(), 1.0);
    try_integrate_oscillatory(|a| Ok(hurwitz_zeta1(u, a, cfg)? * hurwitz_zeta1(v, a, cfg)?), &osc, 0.0, 1.0, cfg)
}

const ASYMPTOTIC_TERMS: usize = 14;
const FAR_CUT: i64 = 1_000_000;

/// `a_m(s) ~ sum_j (-1)^j (s)_j / (2 pi i m)^(j+1)` with the coefficients
/// precomputed, evaluated by Horner's rule.
pub(crate) struct AsymptoticA {
    c: [C64; ASYMPTOTIC_TERMS],
}

impl AsymptoticA {
    pub(crate) fn new(s: C64) -> Self {
        let mut c = [c64(0.0, 0.0); ASYMPTOTIC_TERMS];
        let mut p = c64(1.0, 0.0);
        for (j, cj) in c.iter_mut().enumerate() {
            *cj = if j % 2 == 0 { p } else { -p };
            p *= s + j as f64;
        }
        Self { c }
    }

    pub(crate) fn eval(&self, m: i64) -> C64 {
        let x = c64(1.0, 0.0) / c64(0.0, TAU * m as f64);
        let mut acc = c64(0.0, 0.0);
        for cj in self.c.iter().rev() {
            acc = acc * x + cj;
        }
        acc * x
    }
}

fn a_cheap(m: i64, s: C64, asym: &AsymptoticA, exact_up_to: i64, cfg: &EvalConfig) -> Result<C64> {
    if m.abs() <= exact_up_to {
        fourier_coeff_a(m, s, cfg)
    } else {
        Ok(asym.eval(m))
    }
}

/// Truncated convolution `sum_m a_m(u) a_{n-m}(v)` with exact coefficients
/// for `|m| <= m_max`, the asymptotic expansion out to `|m| = 10^6` and the
/// leading `1/m^2` remainder beyond.
pub fn qn_convolution(n: i64, u: C64, v: C64, m_max: i64, cfg: &EvalConfig) -> Result<C64> {
    let exact = m_max.max(n.abs() + 1);
    let (au, av) = (AsymptoticA::new(u), AsymptoticA::new(v));
    let mut acc = ComplexSum::new();
    for m in -exact..=exact {
        acc.add(a_cheap(m, u, &au, exact, cfg)? * a_cheap(n - m, v, &av, exact + n.abs(), cfg)?);
    }
    let mut far = ComplexSum::new();
    for m in (exact + 1)..=FAR_CUT {
        for mm in [m, -m] {
            far.add(au.eval(mm) * a_cheap(n - mm, v, &av, exact + n.abs(), cfg)?);
        }
    }
    // a_m(u) a_{n-m}(v) -> 1/(4 pi^2 m^2) from each side
    let rest = 2.0 / (TAU * TAU * FAR_CUT as f64);
    Ok(acc.value() + far.value() + rest)
}

/// `q_n` for every `n` in `n0..=n1`, sharing one set of integrand samples.
pub fn q_coefficients(u: C64, v: C64, n0: i64, n1: i64, mode: FourierMode, cfg: &EvalConfig) -> Result<FourierCoeffSet> {
    match mode {
        FourierMode::Direct if !(u.re > 1.0 && v.re > 1.0) => return Err(Error::Divergence { decay: u.re.min(v.re) }),
        FourierMode::Continued => check_continued(u, v)?,
        _ => {}
    }
    let (xu, p) = cut_and_order(u, cfg);
    let (xv, _) = cut_and_order(v, cfg);
    let nmax = n0.abs().max(n1.abs()) as f64;
    let spread = u.im.abs() + v.im.abs();
    let build = |x: f64| SpectralGrid::new(1.0, x, |a| TAU * nmax + spread / a, cfg.max_subdivisions);
    let grid_u = build(xu)?;
    let grid_v = if xv == xu { grid_u.clone() } else { build(xv)? };
    let g1 = grid_u.sample(|a| amplitude(mode, u, v, a, cfg))?;
    let g2 = grid_v.sample(|a| amplitude(mode, v, u, a, cfg))?;
    let h1 = grid_u.transform(&g1, n0, n1);
    let h2 = grid_v.transform(&g2, n0, n1);
    let leading = mode == FourierMode::Direct;
    let e1 = expansion(u, v, p, leading);
    let e2 = expansion(v, u, p, leading);
    let one = c64(1.0, 0.0);
    let mut coeffs = Vec::with_capacity(h1.len());
    for (j, n) in (n0..=n1).enumerate() {
        let base = match mode {
            FourierMode::Direct => fourier_coeff_a(n, u + v, cfg)?,
            FourierMode::Continued => (one / (u - 1.0) + one / (v - 1.0)) * fourier_coeff_a(n, u + v - 1.0, cfg)?,
        };
        let t1 = expansion_tail(&e1, n, xu, cfg)?.value;
        let t2 = expansion_tail(&e2, n, xv, cfg)?.value;
        coeffs.push(base + h1[j] + t1 + h2[j] + t2);
    }
    if v == u.conj() {
        // mirror the non-negative half so that q_{-n} = conj(q_n) holds exactly
        for n in n0..=n1.min(-1) {
            if -n <= n1 {
                coeffs[(n - n0) as usize] = coeffs[(-n - n0) as usize].conj();
            }
        }
    }
    Ok(FourierCoeffSet { u, v: Some(v), n_min: n0, coeffs, mode, evaluations: grid_u.len() + grid_v.len() })
}

/// `int_1^upper a^-v zeta1(u, a) e^{-2 pi i n a} da` for every `n` in `n0..=n1`.
pub fn truncated_product_transforms(u: C64, v: C64, upper: f64, n0: i64, n1: i64, cfg: &EvalConfig) -> Result<Vec<C64>> {
    let nmax = n0.abs().max(n1.abs()) as f64;
    let spread = u.im.abs() + v.im.abs();
    let grid = SpectralGrid::new(1.0, upper, |a| TAU * nmax + spread / a, cfg.max_subdivisions)?;
    let g = grid.sample(|a| amplitude(FourierMode::Direct, u, v, a, cfg))?;
    Ok(grid.transform(&g, n0, n1))
}

/// `a_n(s)` for every `n` in `n0..=n1`.
pub fn a_coefficients(s: C64, n0: i64, n1: i64, cfg: &EvalConfig) -> Result<FourierCoeffSet> {
    let coeffs = (n0..=n1).map(|n| fourier_coeff_a(n, s, cfg)).collect::<Result<Vec<_>>>()?;
    let mode = if s.re > 1.0 { FourierMode::Direct } else { FourierMode::Continued };
    Ok(FourierCoeffSet { u: s, v: None, n_min: n0, coeffs, mode, evaluations: 0 })
}
