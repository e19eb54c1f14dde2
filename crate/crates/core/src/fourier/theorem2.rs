use alloc::vec::Vec;

use super::qn::{check_eta, truncated_product_transforms};
use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::special::riemann_zeta;
use crate::sum::Neumaier;
use crate::{c64, TAU};

/// One point of the fourth-moment bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Theorem2Record {
    pub t: f64,
    pub eta: f64,
    /// `|zeta(1/2 + it)|^4`
    pub zeta_fourth: f64,
    /// `sum_{|n| <= t/pi} |int_1^{t/2pi+eta} a^(-1/2+it) zeta1(1/2+it, a) e^{-2 pi i n a} da|^2`
    pub sum: f64,
    /// `zeta_fourth / (t^(1/2) sum)`
    pub ratio: f64,
}

/// The sum on the right of the fourth-moment bound.
pub fn theorem2_sum(t: f64, eta: f64, cfg: &EvalConfig) -> Result<f64> {
    check_eta(eta)?;
    let u = c64(0.5, t);
    let v = u.conj();
    let limit = (t.abs() / core::f64::consts::PI).floor() as i64;
    let h = truncated_product_transforms(u, v, t.abs() / TAU + eta, -limit, limit, cfg)?;
    let mut acc = Neumaier::default();
    for z in &h {
        acc.add(z.norm_sqr());
    }
    Ok(acc.value())
}

/// Ratios `|zeta(1/2+it)|^4 / (t^(1/2) sum)` over a grid.
pub fn theorem2_check(t_grid: &[f64], eta: f64, cfg: &EvalConfig) -> Result<Vec<Theorem2Record>> {
    let mut out = Vec::with_capacity(t_grid.len());
    for &t in t_grid {
        if !(t > 0.0 && t <= 500.0) {
            return Err(Error::Domain { function: "theorem2_check", reason: "requires 0 < t <= 500" });
        }
        let z = riemann_zeta(c64(0.5, t), cfg)?.norm().powi(4);
        let sum = theorem2_sum(t, eta, cfg)?;
        out.push(Theorem2Record { t, eta, zeta_fourth: z, sum, ratio: z / (t.sqrt() * sum) });
    }
    Ok(out)
}
