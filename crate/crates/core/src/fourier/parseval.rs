use alloc::vec::Vec;

use super::qn::{check_eta, q_coefficients, truncated_product_integral, AsymptoticA};
use super::FourierMode;
use crate::afe::hurwitz_power_mean;
use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::quadrature::{try_integrate_oscillatory, OscSpec};
use crate::report::{Cost, IdentityReport, Params};
use crate::special::{fourier_coeff_a, hurwitz_zeta, hurwitz_zeta1, rpow};
use crate::sum::{ComplexSum, Neumaier};
use crate::{c64, C64, TAU};

const FAR_CUT: i64 = 1_000_000;

/// Default coefficient cutoff for the second-moment Parseval sum.
pub fn second_moment_cutoff(t: f64) -> i64 {
    (t.abs() / core::f64::consts::PI).ceil() as i64 + 200
}

/// Default coefficient cutoff for the fourth-moment Parseval sum, `ceil(2t/pi) + 50`.
pub fn fourth_moment_cutoff(t: f64) -> i64 {
    (2.0 * t.abs() / core::f64::consts::PI).ceil() as i64 + 50
}

/// `int_0^1 |zeta1(s,a)|^2 da` against `sum_n |a_n(s)|^2`.
///
/// Coefficients with `|n| <= n_max` are computed exactly, the next ones up to
/// `10^6` from their asymptotic expansion and the rest from the leading
/// `1 / (4 pi^2 n^2)`. Metric `tail` is everything past `n_max`.
pub fn parseval_second_moment(s: C64, n_max: i64, cfg: &EvalConfig) -> Result<IdentityReport> {
    if !(s.re > 0.0) {
        return Err(Error::Domain { function: "parseval_second_moment", reason: "requires Re s > 0" });
    }
    let lhs = hurwitz_power_mean(s, 1, cfg)?;
    let mut head = Neumaier::default();
    for n in -n_max..=n_max {
        head.add(fourier_coeff_a(n, s, cfg)?.norm_sqr());
    }
    let asym = AsymptoticA::new(s);
    let mut tail = Neumaier::default();
    for n in (n_max + 1)..=FAR_CUT {
        tail.add(asym.eval(n).norm_sqr() + asym.eval(-n).norm_sqr());
    }
    let far = 2.0 * hurwitz_zeta(c64(2.0, 0.0), (FAR_CUT + 1) as f64, cfg)?.re / (TAU * TAU);
    let tail = tail.value() + far;
    let params = Params::new().with("s", s).with("n_max", n_max);
    Ok(IdentityReport::new("parseval_second_moment", params, c64(lhs.value, 0.0), c64(head.value() + tail, 0.0), Cost { evaluations: lhs.evaluations })
        .with_metric("tail", tail))
}

/// `sum_{|n| > n_max} |q_n|^2` from the jump of `zeta1(u,.) zeta1(v,.)`
/// across the period, with a bound for the next order.
pub fn product_jump_tail(u: C64, v: C64, n_max: i64, cfg: &EvalConfig) -> Result<(f64, f64)> {
    let zu = hurwitz_zeta1(u, 0.0, cfg)?;
    let zv = hurwitz_zeta1(v, 0.0, cfg)?;
    let one = c64(1.0, 0.0);
    let p0 = zu * zv;
    let p1 = (zu - one) * (zv - one);
    let dp = |a: f64| -> Result<C64> {
        Ok(-u * hurwitz_zeta1(u + 1.0, a, cfg)? * hurwitz_zeta1(v, a, cfg)?
            - v * hurwitz_zeta1(u, a, cfg)? * hurwitz_zeta1(v + 1.0, a, cfg)?)
    };
    let i2pi = c64(0.0, TAU);
    let c1 = (p0 - p1) / i2pi;
    let c2 = (dp(0.0)? - dp(1.0)?) / (i2pi * i2pi);
    let n0 = (n_max + 1) as f64;
    let z2 = hurwitz_zeta(c64(2.0, 0.0), n0, cfg)?.re;
    let z4 = hurwitz_zeta(c64(4.0, 0.0), n0, cfg)?.re;
    let value = 2.0 * c1.norm_sqr() * z2;
    let bound = 4.0 * (c2.norm_sqr() + (c1 * c2).norm()) * z4;
    Ok((value, bound))
}

/// `int_0^1 |zeta1(u,a)|^4 da` against `sum_n |q_n(u, conj u)|^2`.
///
/// `q_n` for `|n| <= n_max` come from the continued representation; the rest
/// from [`product_jump_tail`]. Metrics: `tail`, `tail_bound`, `eta`.
pub fn parseval_fourth_moment(u: C64, eta: f64, n_max: i64, cfg: &EvalConfig) -> Result<IdentityReport> {
    check_eta(eta)?;
    if !(u.re >= 0.5) {
        return Err(Error::Domain { function: "parseval_fourth_moment", reason: "requires sigma >= 1/2" });
    }
    let v = u.conj();
    let lhs = hurwitz_power_mean(u, 2, cfg)?;
    let q = q_coefficients(u, v, -n_max, n_max, FourierMode::Continued, cfg)?;
    let mut head = Neumaier::default();
    for c in &q.coeffs {
        head.add(c.norm_sqr());
    }
    let (tail, bound) = product_jump_tail(u, v, n_max, cfg)?;
    let params = Params::new().with("u", u).with("eta", eta).with("n_max", n_max);
    Ok(IdentityReport::new(
        "parseval_fourth_moment",
        params,
        c64(lhs.value, 0.0),
        c64(head.value() + tail, 0.0),
        Cost { evaluations: lhs.evaluations + q.evaluations },
    )
    .with_metric("tail", tail)
    .with_metric("tail_bound", bound)
    .with_metric("eta", eta))
}

/// `sum_{|n| > t/pi} |q_n(u, conj u)|^2` two ways: Parseval minus the head,
/// and the coefficients up to [`fourth_moment_cutoff`] plus the jump tail.
/// Metric `scaled` divides by `t^(2 - 4 sigma)`.
pub fn fourth_moment_tail(u: C64, cfg: &EvalConfig) -> Result<IdentityReport> {
    let t = u.im.abs();
    let v = u.conj();
    let split = (t / core::f64::consts::PI).floor() as i64;
    let n_max = fourth_moment_cutoff(t);
    let q = q_coefficients(u, v, -n_max, n_max, FourierMode::Continued, cfg)?;
    let mut head = Neumaier::default();
    let mut mid = Neumaier::default();
    for (j, c) in q.coeffs.iter().enumerate() {
        let n = q.n_min + j as i64;
        if n.abs() <= split {
            head.add(c.norm_sqr());
        } else {
            mid.add(c.norm_sqr());
        }
    }
    let (jump, _) = product_jump_tail(u, v, n_max, cfg)?;
    let total = hurwitz_power_mean(u, 2, cfg)?;
    let by_parseval = total.value - head.value();
    let direct = mid.value() + jump;
    let params = Params::new().with("u", u);
    Ok(IdentityReport::new("fourth_moment_tail", params, c64(by_parseval, 0.0), c64(direct, 0.0), Cost { evaluations: total.evaluations + q.evaluations })
        .with_metric("scaled", direct / t.max(1.0).powf(2.0 - 4.0 * u.re)))
}

/// `|int_1^{t/2pi+eta} a^-v zeta1(u,a) e^{-2 pi i n a} da|` for
/// `|n| > t/2pi` against `t^(1/2) / |n - t/2pi|`.
///
/// `lhs` holds the integral and `rhs` the envelope; metric `ratio` is
/// their quotient.
pub fn highfreq_tail_check(n: i64, u: C64, v: C64, eta: f64, cfg: &EvalConfig) -> Result<IdentityReport> {
    check_eta(eta)?;
    let t = u.im.abs();
    let f = t / TAU;
    if !((n.abs() as f64) > f) {
        return Err(Error::Domain { function: "highfreq_tail_check", reason: "requires |n| > t/2pi" });
    }
    let r = truncated_product_integral(n, u, v, f + eta, cfg)?;
    let envelope = t.sqrt() / (n as f64 - u.im.signum() * f).abs();
    let params = Params::new().with("n", n as i64).with("u", u).with("v", v).with("eta", eta);
    Ok(IdentityReport::new("highfreq_tail", params, r.value, c64(envelope, 0.0), Cost { evaluations: r.evaluations })
        .with_metric("ratio", r.value.norm() / envelope))
}

/// `int_1^{t/2pi+eta} a^(-s1 + i e t) (a + y)^(-s2 - i e t) e^{-2 pi i n a} da`,
/// `e = +1` or `-1` (`conjugate`), against `y^(-s2) / |n - e t/2pi|`.
pub fn highfreq_kernel_check(
    n: i64,
    sigma1: f64,
    sigma2: f64,
    t: f64,
    y: f64,
    eta: f64,
    conjugate: bool,
    cfg: &EvalConfig,
) -> Result<IdentityReport> {
    check_eta(eta)?;
    if !(y > 1.0 && sigma1 > 0.0 && sigma2 > 0.0) {
        return Err(Error::Domain { function: "highfreq_kernel_check", reason: "requires y > 1 and sigma1, sigma2 > 0" });
    }
    let f = t / TAU;
    if !((n.abs() as f64) > f) {
        return Err(Error::Domain { function: "highfreq_kernel_check", reason: "requires |n| > t/2pi" });
    }
    let e = if conjugate { -1.0 } else { 1.0 };
    let p1 = c64(-sigma1, e * t);
    let p2 = c64(-sigma2, -e * t);
    let osc = OscSpec::new(-n as f64, 0.0).with_companion(2.0 * t, 0.0);
    let r = try_integrate_oscillatory(|a| Ok(rpow(a, p1) * rpow(a + y, p2)), &osc, 1.0, f + eta, cfg)?;
    let envelope = y.powf(-sigma2) / (n as f64 - e * f).abs();
    let params = Params::new().with("n", n as i64).with("t", t).with("y", y).with("eta", eta);
    Ok(IdentityReport::new("highfreq_kernel", params, r.value, c64(envelope, 0.0), Cost { evaluations: r.evaluations })
        .with_metric("ratio", r.value.norm() / envelope))
}

/// Summation method for [`fourier_reconstruct`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reconstruction {
    /// Symmetric partial sum `sum_{|n|<=M} a_n e^{2 pi i n a}`.
    Partial,
    /// Fejer means of the partial sums.
    Cesaro,
    /// The sawtooth `1/2 - a` carrying the `1/(2 pi i n)` part of every
    /// coefficient is summed in closed form; Fejer means are applied to the
    /// `O(1/n^2)` remainder.
    JumpCorrected,
    /// Jump correction followed by de la Vallee Poussin (delayed Cesaro)
    /// means: full weight up to `M/2`, then a linear taper to zero at `M+1`.
    DelayedMeans,
}

/// Fourier series of `zeta1(s, .)` at `a` in `(0, 1)` from `|n| <= M`.
pub fn fourier_reconstruct(s: C64, alpha: f64, m: i64, method: Reconstruction, cfg: &EvalConfig) -> Result<C64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::Domain { function: "fourier_reconstruct", reason: "requires 0 < alpha < 1" });
    }
    let coeffs: Vec<C64> = (-m..=m).map(|n| fourier_coeff_a(n, s, cfg)).collect::<Result<_>>()?;
    let corrected = matches!(method, Reconstruction::JumpCorrected | Reconstruction::DelayedMeans);
    let mut acc = ComplexSum::new();
    for (j, a) in coeffs.iter().enumerate() {
        let n = j as i64 - m;
        let na = n.abs() as f64;
        let mf = (m + 1) as f64;
        let weight = match method {
            Reconstruction::Partial => 1.0,
            Reconstruction::Cesaro | Reconstruction::JumpCorrected => 1.0 - na / mf,
            Reconstruction::DelayedMeans => ((mf - na) / (mf - 0.5 * m as f64)).min(1.0),
        };
        let mut c = *a;
        if corrected && n != 0 {
            c -= c64(1.0, 0.0) / c64(0.0, TAU * n as f64);
        }
        let (sn, cs) = (TAU * n as f64 * alpha).sin_cos();
        acc.add(c * c64(cs, sn) * weight);
    }
    let mut value = acc.value();
    if corrected {
        value += 0.5 - alpha;
    }
    Ok(value)
}
