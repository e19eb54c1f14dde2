use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::quadrature::{truncation_height, try_integrate_vertical_line, ContourSpec};
use crate::special::{bernoulli_2k, em_bound, hurwitz_zeta, hurwitz_zeta1, ln_gamma, riemann_zeta, rpow};
use crate::sum::ComplexSum;
use crate::C64;

const TAIL_TERMS: usize = 12;

/// Admissible Mellin-Barnes abscissas `(lo, hi)` for the double sum at `(u, v)`:
/// `max(-Re u, 1 - Re(u + v)) < c < -1`.
pub fn admissible_abscissa(u: C64, v: C64) -> Option<(f64, f64)> {
    let lo = (-u.re).max(1.0 - (u + v).re);
    if lo < -1.0 { Some((lo, -1.0)) } else { None }
}

/// `f(u, v, a) = sum_{n >= 1} (n + a)^(-v) zeta1(u, n + a)` with an error bound.
///
/// The head is summed directly; beyond `N` the inner function is replaced by
/// its Euler-Maclaurin expansion and the outer sum collapses into Hurwitz zeta
/// values at shift `N + a`.
pub fn f_series_with_error(u: C64, v: C64, alpha: f64, cfg: &EvalConfig) -> Result<(C64, f64)> {
    if !(u.re > 1.0 && v.re > 1.0) {
        return Err(Error::Divergence { decay: u.re.min(v.re) });
    }
    if !(alpha >= 0.0) {
        return Err(Error::Domain { function: "f_series", reason: "alpha must be non-negative" });
    }
    let n_head = (1.2 * (u + 2.0 * TAIL_TERMS as f64).norm()).ceil().max(20.0) as usize;
    let mut head = ComplexSum::new();
    for n in 1..n_head {
        let x = n as f64 + alpha;
        head.add(rpow(x, -v) * hurwitz_zeta1(u, x, cfg)?);
    }
    let x = n_head as f64 + alpha;
    let w = u + v;
    let mut tail = ComplexSum::new();
    tail.add(hurwitz_zeta(w - 1.0, x, cfg)? / (u - 1.0));
    tail.add(-hurwitz_zeta(w, x, cfg)? * 0.5);
    let mut poch = u;
    let mut fact = 2.0;
    for k in 1..=TAIL_TERMS {
        let c = poch * (bernoulli_2k(k) / fact);
        tail.add(c * hurwitz_zeta(w + (2 * k - 1) as f64, x, cfg)?);
        let kk = (2 * k) as f64;
        poch = poch * (u + (kk - 1.0)) * (u + kk);
        fact *= (kk + 1.0) * (kk + 2.0);
    }
    let err = em_bound(u, x, TAIL_TERMS) * x.powf(-v.re) * x / (w.re + (2 * TAIL_TERMS) as f64 - 2.0);
    Ok((head.value() + tail.value(), err))
}

/// Double sum `f(u, v, a)` by its convergent series.
pub fn f_series(u: C64, v: C64, alpha: f64, cfg: &EvalConfig) -> Result<C64> {
    f_series_with_error(u, v, alpha, cfg).map(|r| r.0)
}

/// Double sum `f(u, v, a)` by the Mellin-Barnes integral
/// `(1/2 pi i) int_(c) Gamma(u+z)/Gamma(u) Gamma(-z) zeta(-z) zeta1(u+v+z, a) dz`.
///
/// `c = None` picks the midpoint of the admissible strip.
pub fn f_contour(u: C64, v: C64, alpha: f64, c: Option<f64>, cfg: &EvalConfig) -> Result<C64> {
    if !(u.re > 1.0 && v.re > 1.0) {
        return Err(Error::Divergence { decay: u.re.min(v.re) });
    }
    let (lo, hi) = admissible_abscissa(u, v)
        .ok_or(Error::Domain { function: "f_contour", reason: "empty admissible strip" })?;
    let c = c.unwrap_or(0.5 * (lo + hi));
    if !(c > lo && c < hi) {
        return Err(Error::Domain { function: "f_contour", reason: "abscissa outside the admissible strip" });
    }
    let spec = ContourSpec::new(c, truncation_height(cfg.abs_tol, 2.0 + u.re) + u.im.abs(), (c - lo).min(hi - c));
    let lg_u = ln_gamma(u)?;
    let w = u + v;
    let r = try_integrate_vertical_line(
        |z| {
            let g = (ln_gamma(u + z)? - lg_u + ln_gamma(-z)?).exp();
            Ok(g * riemann_zeta(-z, cfg)? * hurwitz_zeta1(w + z, alpha, cfg)?)
        },
        &spec,
        cfg,
    )?;
    Ok(r.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    #[test]
    fn strip_for_symmetric_exponents() {
        let (lo, hi) = admissible_abscissa(c64(2.0, 0.0), c64(2.0, 0.0)).unwrap();
        assert_eq!((lo, hi), (-2.0, -1.0));
        assert!(admissible_abscissa(c64(1.0, 0.0), c64(1.0, 0.0)).is_none());
    }

    #[test]
    fn symmetric_closed_form() {
        // zeta1(3,0)^2 = zeta1(6,0) + 2 f(3,3,0)
        let cfg = EvalConfig::default();
        let z3 = riemann_zeta(c64(3.0, 0.0), &cfg).unwrap();
        let z6 = riemann_zeta(c64(6.0, 0.0), &cfg).unwrap();
        let f = f_series(c64(3.0, 0.0), c64(3.0, 0.0), 0.0, &cfg).unwrap();
        assert!((f - (z3 * z3 - z6) * 0.5).norm() < 1e-15);
    }
}
