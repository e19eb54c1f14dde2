use alloc::vec::Vec;

use super::gk::try_integrate_with_breaks;
use super::{infallible, QuadResult};
use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::C64;

const PANELS_PER_BLOCK: usize = 8;

/// `int_a^oo f` for `|f(x)| <= C x^(-decay)` with `decay > 1`.
///
/// The range is cut into geometric panels `[x, 2x]`, integrated block by
/// block. After each block the constant `C` is measured on that block and the
/// remaining tail is bounded by `C A^(1 - decay) / (decay - 1)`.
pub fn try_integrate_semi_infinite<F>(mut f: F, a: f64, decay: f64, cfg: &EvalConfig) -> Result<QuadResult>
where
    F: FnMut(f64) -> Result<C64>,
{
    if !(decay > 1.0) {
        return Err(Error::Divergence { decay });
    }
    if !a.is_finite() {
        return Err(Error::Domain { function: "integrate_semi_infinite", reason: "lower limit must be finite" });
    }
    let mut acc = QuadResult::ZERO;
    let mut x = a;
    if a < 1.0 {
        acc = try_integrate_with_breaks(&mut f, &[a, 1.0], cfg)?;
        x = 1.0;
    }
    let mut sub = *cfg;
    loop {
        let mut breaks = Vec::with_capacity(PANELS_PER_BLOCK + 1);
        breaks.push(x);
        for _ in 0..PANELS_PER_BLOCK {
            x *= 2.0;
            breaks.push(x);
        }
        let mut peak = 0.0f64;
        // block tolerance relative to the running total
        sub.abs_tol = cfg.abs_tol.max(cfg.rel_tol * acc.value.norm()) * 0.1;
        let block = try_integrate_with_breaks(
            |y| {
                let v = f(y)?;
                peak = peak.max(v.norm() * y.powf(decay));
                Ok(v)
            },
            &breaks,
            &sub,
        )?;
        acc = acc.combine(block);
        let tail = peak * x.powf(1.0 - decay) / (decay - 1.0);
        let target = cfg.target(acc.value.norm());
        if tail <= target {
            acc.error += tail;
            return Ok(acc);
        }
        if x > 1e290 {
            return Err(Error::Convergence { evaluations: acc.evaluations, estimate: tail, target });
        }
    }
}

/// Infallible-integrand version of [`try_integrate_semi_infinite`].
pub fn integrate_semi_infinite<F>(f: F, a: f64, decay: f64, cfg: &EvalConfig) -> Result<QuadResult>
where
    F: FnMut(f64) -> C64,
{
    try_integrate_semi_infinite(infallible(f), a, decay, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    #[test]
    fn inverse_square() {
        let r = integrate_semi_infinite(|x| c64(x.powi(-2), 0.0), 1.0, 2.0, &EvalConfig::default()).unwrap();
        assert!((r.value.re - 1.0).abs() < 1e-11, "{r:?}");
    }

    #[test]
    fn three_halves_from_four() {
        let cfg = EvalConfig::default().with_tolerances(1e-12, 1e-10);
        let r = integrate_semi_infinite(|x| c64(x.powf(-1.5), 0.0), 4.0, 1.5, &cfg).unwrap();
        assert!((r.value.re - 1.0).abs() < 1e-9, "{r:?}");
    }

    #[test]
    fn divergent_decay_rejected() {
        let r = integrate_semi_infinite(|x| c64(1.0 / x, 0.0), 1.0, 1.0, &EvalConfig::default());
        assert!(matches!(r, Err(Error::Divergence { .. })));
    }
}
