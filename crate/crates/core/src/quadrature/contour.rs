use alloc::vec::Vec;

use super::gk::try_integrate_with_breaks;
use super::QuadResult;
use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::{c64, C64, PI, TAU};

/// Vertical line `Re z = c`, truncated at `|Im z| <= t_max`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourSpec {
    pub c: f64,
    pub t_max: f64,
    /// Distance from `c` to the nearest pole of the integrand on the real axis.
    pub pole_clearance: f64,
}

impl ContourSpec {
    pub fn new(c: f64, t_max: f64, pole_clearance: f64) -> Self {
        Self { c, t_max, pole_clearance }
    }
}

/// Height beyond which `sqrt(2 pi) (1 + y)^poly e^{-pi y / 2}` drops below `abs_tol`, at least 30.
pub fn truncation_height(abs_tol: f64, poly: f64) -> f64 {
    let tol = abs_tol.max(1e-300);
    let mut y = 30.0f64;
    let bound = |y: f64| (TAU.sqrt().ln() + poly * (1.0 + y).ln() - PI * y / 2.0).exp();
    while bound(y) > tol && y < 1e4 {
        y += 1.0;
    }
    y
}

/// `(1 / 2 pi i) int_{c - iT}^{c + iT} g(z) dz`.
///
/// The truncation height is pushed out while the integrand at the edges is
/// still above the tolerance.
pub fn try_integrate_vertical_line<G>(mut g: G, spec: &ContourSpec, cfg: &EvalConfig) -> Result<QuadResult>
where
    G: FnMut(C64) -> Result<C64>,
{
    if spec.pole_clearance < 1e-3 {
        return Err(Error::PoleTooClose { c: spec.c, clearance: spec.pole_clearance });
    }
    if !(spec.t_max > 0.0) {
        return Err(Error::Domain { function: "integrate_vertical_line", reason: "t_max must be positive" });
    }
    let c = spec.c;
    let mut t = spec.t_max;
    for _ in 0..6 {
        let edge = g(c64(c, t))?.norm() + g(c64(c, -t))?.norm();
        if edge <= cfg.abs_tol * 1e-2 {
            break;
        }
        t *= 1.5;
    }
    let n = (2.0 * t).ceil() as usize;
    let breaks: Vec<f64> = (0..=n).map(|k| -t + 2.0 * t * k as f64 / n as f64).collect();
    let r = try_integrate_with_breaks(|y| g(c64(c, y)), &breaks, cfg)?;
    let edge = g(c64(c, t))?.norm() + g(c64(c, -t))?.norm();
    Ok(QuadResult { value: r.value / TAU, error: (r.error + edge) / TAU, evaluations: r.evaluations + 2 })
}

/// Infallible-integrand version of [`try_integrate_vertical_line`].
pub fn integrate_vertical_line<G>(mut g: G, spec: &ContourSpec, cfg: &EvalConfig) -> Result<QuadResult>
where
    G: FnMut(C64) -> C64,
{
    try_integrate_vertical_line(|z| Ok(g(z)), spec, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::gamma;

    #[test]
    fn mellin_barnes_half() {
        // (1/2 pi i) int Gamma(1 + z) Gamma(-z) dz at c = -1/2 equals 1/2
        let spec = ContourSpec::new(-0.5, 30.0, 0.5);
        let r = try_integrate_vertical_line(
            |z| Ok(gamma(z + 1.0)? * gamma(-z)?),
            &spec,
            &EvalConfig::default(),
        )
        .unwrap();
        assert!((r.value - c64(0.5, 0.0)).norm() < 1e-12, "{r:?}");
    }

    #[test]
    fn mellin_barnes_binomial() {
        // (1/2 pi i) int Gamma(s + z) Gamma(-z) x^z dz / Gamma(s) = (1 + x)^{-s}
        let s = c64(2.0, 0.0);
        let x = 1.0f64;
        let spec = ContourSpec::new(-0.5, 30.0, 0.5);
        let r = try_integrate_vertical_line(
            |z| Ok(gamma(s + z)? * gamma(-z)? * c64(x, 0.0).powc(z) / gamma(s)?),
            &spec,
            &EvalConfig::default(),
        )
        .unwrap();
        assert!((r.value.re - 0.25).abs() < 1e-12, "{r:?}");
    }

    #[test]
    fn refuses_contour_on_pole() {
        let spec = ContourSpec::new(0.0, 30.0, 0.0);
        assert!(matches!(
            integrate_vertical_line(|_| c64(1.0, 0.0), &spec, &EvalConfig::default()),
            Err(Error::PoleTooClose { .. })
        ));
    }
}
