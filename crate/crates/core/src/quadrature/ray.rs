use alloc::vec::Vec;

use super::gk::try_integrate_with_breaks;
use super::QuadResult;
use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::C64;

/// `int_0^oo f(r) dr` for an integrand that decays at least exponentially.
///
/// `scale` is the length over which `f` first changes appreciably. Panels grow
/// geometrically until `|f|` falls below `1e-18` of its peak.
pub fn try_integrate_ray<F>(mut f: F, scale: f64, cfg: &EvalConfig) -> Result<QuadResult>
where
    F: FnMut(f64) -> Result<C64>,
{
    if !(scale > 0.0) || !scale.is_finite() {
        return Err(Error::Domain { function: "integrate_ray", reason: "scale must be positive" });
    }
    let mut breaks = Vec::new();
    breaks.push(0.0);
    let mut r = 0.0;
    let mut w = scale;
    let mut peak = f(0.0)?.norm();
    let floor = cfg.abs_tol * 1e-3;
    let mut quiet = 0;
    for _ in 0..4000 {
        r += w;
        breaks.push(r);
        let v = f(r)?.norm();
        peak = peak.max(v);
        if v * w.max(scale) <= (1e-18 * peak * scale).max(floor * 1e-3) {
            quiet += 1;
            if quiet >= 3 {
                return try_integrate_with_breaks(&mut f, &breaks, cfg);
            }
        } else {
            quiet = 0;
        }
        w *= 1.25;
    }
    Err(Error::Convergence { evaluations: breaks.len(), estimate: f64::INFINITY, target: floor })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    #[test]
    fn exponential() {
        let r = try_integrate_ray(|x| Ok(c64((-3.0 * x).exp(), 0.0)), 0.3, &EvalConfig::default()).unwrap();
        assert!((r.value.re - 1.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn gaussian() {
        let r = try_integrate_ray(|x| Ok(c64((-x * x).exp(), 0.0)), 0.5, &EvalConfig::default()).unwrap();
        assert!((r.value.re - crate::PI.sqrt() / 2.0).abs() < 1e-14);
    }
}
