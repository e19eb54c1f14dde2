use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::special::bernoulli::bernoulli_2k;
use crate::special::chi::chi;
use crate::special::cmath::rpow;
use crate::sum::{ComplexSum, Neumaier};
use crate::{c64, C64, TAU};

/// A zeta value with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaEval {
    pub value: C64,
    /// Truncation bound plus a rounding estimate (absolute).
    pub error: f64,
    /// Number of directly summed terms.
    pub terms: usize,
}

/// Euler-Maclaurin truncation bound after `p` Bernoulli corrections at `x`.
pub(crate) fn em_bound(s: C64, x: f64, p: usize) -> f64 {
    let two_p = 2 * p;
    let denom = s.re + two_p as f64 - 1.0;
    let mut ratio = 1.0f64;
    for j in 0..two_p {
        ratio *= (s + j as f64).norm() / (TAU * x);
    }
    4.0 * ratio * x.powf(1.0 - s.re) / denom
}

/// `sum_{k=1}^{p} B_2k / (2k)! (s)_{2k-1} x^{-s-2k+1}` given `x^{-s}`.
fn em_corrections(s: C64, x: f64, xs: C64, p: usize) -> C64 {
    let mut c = s / (2.0 * x);
    let mut acc = ComplexSum::new();
    let x2 = x * x;
    for k in 1..=p {
        acc.add(c * bernoulli_2k(k));
        let kk = (2 * k) as f64;
        c = c * (s + (kk - 1.0)) * (s + kk) / ((kk + 1.0) * (kk + 2.0) * x2);
    }
    acc.value() * xs
}

/// `sum_{n >= 0} (n + a)^(-s)` for `a > 0` by Euler-Maclaurin.
fn hurwitz_em(s: C64, a: f64, cfg: &EvalConfig) -> Result<ZetaEval> {
    if s.re == 1.0 && s.im == 0.0 {
        return Err(Error::Pole { function: "zeta", at: s });
    }
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::Domain { function: "hurwitz_zeta", reason: "shift must be positive and finite" });
    }
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::Domain { function: "hurwitz_zeta", reason: "non-finite argument" });
    }
    let p = (cfg.bernoulli_order / 2).max(1);
    if s.re + (2 * p) as f64 - 1.0 <= 0.5 {
        return Err(Error::Domain { function: "hurwitz_zeta", reason: "real part too negative for Bernoulli order" });
    }
    let em_rel = (cfg.rel_tol * 1e-4).max(1e-17);
    let base = (cfg.em_terms as f64).max((2.0 * s.im.abs() / core::f64::consts::PI).ceil());
    let mut n = cfg.em_terms.max((base - a).max(0.0).ceil() as usize);
    let scale_at = |x: f64| x.powf(1.0 - s.re) / (s - 1.0).norm() + x.powf(-s.re);
    for _ in 0..200 {
        let x = a + n as f64;
        let ratio = em_bound(s, x, p) / scale_at(x);
        if ratio <= em_rel {
            break;
        }
        let grow = (ratio / em_rel).powf(1.0 / (2 * p) as f64).max(1.1);
        let next = ((x * grow) - a).ceil() as usize + 1;
        if next > cfg.max_series_terms {
            return Err(Error::Convergence { evaluations: n, estimate: ratio, target: em_rel });
        }
        n = next;
    }

    let mut direct = ComplexSum::new();
    let mut rounding = Neumaier::new();
    let tabs = s.im.abs();
    for k in 0..n {
        let y = a + k as f64;
        let l = y.ln();
        let m = (-s.re * l).exp();
        let (sn, cs) = (-s.im * l).sin_cos();
        direct.add(c64(m * cs, m * sn));
        rounding.add(m * (4.0 + 2.0 * tabs * l.abs()));
    }
    let x = a + n as f64;
    let xs = rpow(x, -s);
    let lead = xs * x / (s - 1.0);
    let half = xs * 0.5;
    let corr = em_corrections(s, x, xs, p);
    let tail = lead + half + corr;
    let value = direct.value() + tail;
    let lx = x.ln().abs();
    let round_err = f64::EPSILON * (rounding.value() + (lead.norm() + half.norm() + corr.norm()) * (8.0 + 2.0 * tabs * lx));
    let error = em_bound(s, x, p) + round_err;
    Ok(ZetaEval { value, error, terms: n })
}

/// Modified Hurwitz zeta `zeta1(s, a) = sum_{n >= 1} (n + a)^(-s)` with its error estimate.
pub fn hurwitz_zeta1_with_error(s: C64, a: f64, cfg: &EvalConfig) -> Result<ZetaEval> {
    if !(a > -1.0) {
        return Err(Error::Domain { function: "hurwitz_zeta1", reason: "shift must exceed -1" });
    }
    if a == 0.0 && s.re < -2.0 {
        return zeta_reflected(s, cfg);
    }
    hurwitz_em(s, 1.0 + a, cfg)
}

/// Modified Hurwitz zeta `zeta1(s, a) = sum_{n >= 1} (n + a)^(-s)`.
pub fn hurwitz_zeta1(s: C64, a: f64, cfg: &EvalConfig) -> Result<C64> {
    hurwitz_zeta1_with_error(s, a, cfg).map(|z| z.value)
}

/// Hurwitz zeta `zeta(s, a) = sum_{n >= 0} (n + a)^(-s)`, `a > 0`.
pub fn hurwitz_zeta(s: C64, a: f64, cfg: &EvalConfig) -> Result<C64> {
    hurwitz_em(s, a, cfg).map(|z| z.value)
}

/// Hurwitz zeta with error estimate.
pub fn hurwitz_zeta_shifted(s: C64, a: f64, cfg: &EvalConfig) -> Result<ZetaEval> {
    hurwitz_em(s, a, cfg)
}

fn zeta_reflected(s: C64, cfg: &EvalConfig) -> Result<ZetaEval> {
    let x = chi(s)?;
    let z = hurwitz_em(c64(1.0, 0.0) - s, 1.0, cfg)?;
    let value = x * z.value;
    Ok(ZetaEval {
        value,
        error: x.norm() * z.error + value.norm() * 1e3 * f64::EPSILON * (1.0 + s.norm()),
        terms: z.terms,
    })
}

/// Riemann zeta function.
pub fn riemann_zeta(s: C64, cfg: &EvalConfig) -> Result<C64> {
    hurwitz_zeta1(s, 0.0, cfg)
}

/// Riemann zeta function with error estimate.
pub fn riemann_zeta_with_error(s: C64, cfg: &EvalConfig) -> Result<ZetaEval> {
    hurwitz_zeta1_with_error(s, 0.0, cfg)
}

/// `R(u, a) = zeta1(u, a) - a^(1-u) / (u - 1) + a^(-u) / 2` for `a > 0`.
///
/// For large `a` the asymptotic series is summed directly, which avoids the
/// cancellation between the three terms.
pub fn hurwitz_zeta1_remainder(u: C64, a: f64, cfg: &EvalConfig) -> Result<C64> {
    if !(a > 0.0) {
        return Err(Error::Domain { function: "zeta1_remainder", reason: "shift must be positive" });
    }
    if u.re == 1.0 && u.im == 0.0 {
        return Err(Error::Pole { function: "zeta1_remainder", at: u });
    }
    let p = (cfg.bernoulli_order / 2).max(1);
    if u.re + (2 * p) as f64 - 1.0 > 0.5 {
        let first = (u / 12.0).norm() * a.powf(-u.re - 1.0);
        if em_bound(u, a, p) <= 1e-17 * first {
            let xs = rpow(a, -u);
            return Ok(em_corrections(u, a, xs, p));
        }
    }
    let z = hurwitz_zeta1(u, a, cfg)?;
    let xs = rpow(a, -u);
    Ok(z - xs * a / (u - 1.0) + xs * 0.5)
}

/// `zeta1(u, a) - zeta1(u, 0)`, accurate for small `a`.
pub fn zeta1_increment(u: C64, a: f64, cfg: &EvalConfig) -> Result<C64> {
    if a.abs() >= 0.05 {
        return Ok(hurwitz_zeta1(u, a, cfg)? - hurwitz_zeta1(u, 0.0, cfg)?);
    }
    if a == 0.0 {
        return Ok(c64(0.0, 0.0));
    }
    // Taylor expansion in a: sum_k (-a)^k (u)_k / k! zeta(u + k)
    let mut acc = ComplexSum::new();
    let mut coef = c64(1.0, 0.0);
    for k in 1..60 {
        coef = coef * (u + (k - 1) as f64) * (-a) / k as f64;
        let term = coef * hurwitz_zeta1(u + k as f64, 0.0, cfg)?;
        acc.add(term);
        if term.norm() <= 1e-18 * acc.value().norm() {
            break;
        }
    }
    Ok(acc.value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::PI;

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    #[test]
    fn zeta_closed_forms() {
        let c = cfg();
        let z2 = riemann_zeta(c64(2.0, 0.0), &c).unwrap();
        assert!((z2.re - PI * PI / 6.0).abs() < 1e-15);
        let z4 = riemann_zeta(c64(4.0, 0.0), &c).unwrap();
        assert!((z4.re - PI.powi(4) / 90.0).abs() < 1e-15);
        let z0 = riemann_zeta(c64(0.0, 0.0), &c).unwrap();
        assert!((z0.re + 0.5).abs() < 1e-15);
        let zm1 = riemann_zeta(c64(-1.0, 0.0), &c).unwrap();
        assert!((zm1.re + 1.0 / 12.0).abs() < 1e-13);
        let zm3 = riemann_zeta(c64(-3.0, 0.0), &c).unwrap();
        assert!((zm3.re - 1.0 / 120.0).abs() < 1e-14);
    }

    #[test]
    fn pole() {
        assert!(matches!(riemann_zeta(c64(1.0, 0.0), &cfg()), Err(Error::Pole { .. })));
    }

    #[test]
    fn first_zero() {
        let z = riemann_zeta(c64(0.5, 14.134_725_141_734_693), &cfg()).unwrap();
        assert!(z.norm() < 1e-13, "{z}");
    }

    #[test]
    fn hurwitz_shifts() {
        let c = cfg();
        let a = hurwitz_zeta1(c64(2.0, 0.0), 1.0, &c).unwrap();
        assert!((a.re - (PI * PI / 6.0 - 1.0)).abs() < 1e-15);
        let h = hurwitz_zeta1(c64(2.0, 0.0), 0.5, &c).unwrap();
        assert!((h.re - (PI * PI / 2.0 - 4.0)).abs() < 1e-14);
        let z3 = riemann_zeta(c64(3.0, 0.0), &c).unwrap();
        let h32 = hurwitz_zeta(c64(3.0, 0.0), 2.0, &c).unwrap();
        assert!((h32 - (z3 - 1.0)).norm() < 1e-15);
    }

    #[test]
    fn alpha_zero_is_riemann_bitwise() {
        let c = cfg();
        for s in [c64(0.5, 30.0), c64(2.2, -1.0), c64(-1.5, 7.0)] {
            assert_eq!(hurwitz_zeta1(s, 0.0, &c).unwrap(), riemann_zeta(s, &c).unwrap());
        }
    }

    #[test]
    fn remainder_branches_agree() {
        let c = cfg();
        let u = c64(1.7, 12.0);
        for a in [20.0, 40.0, 80.0, 200.0] {
            let r = hurwitz_zeta1_remainder(u, a, &c).unwrap();
            let z = hurwitz_zeta1(u, a, &c).unwrap();
            let xs = rpow(a, -u);
            let direct = z - xs * a / (u - 1.0) + xs * 0.5;
            assert!((r - direct).norm() <= 1e-9 * r.norm(), "{a}: {r} {direct}");
        }
    }

    #[test]
    fn increment_matches_difference() {
        let c = cfg();
        let u = c64(0.6, 3.0);
        for a in [1e-6, 1e-3, 0.04] {
            let d = zeta1_increment(u, a, &c).unwrap();
            let e = hurwitz_zeta1(u, a, &c).unwrap() - riemann_zeta(u, &c).unwrap();
            assert!((d - e).norm() <= 1e-14 + 1e-10 * d.norm());
        }
    }

    #[test]
    fn functional_equation_far_left() {
        let c = cfg();
        let s = c64(-5.0, 0.0);
        let z = riemann_zeta(s, &c).unwrap();
        assert!((z.re + 1.0 / 252.0).abs() < 1e-14);
    }
}
