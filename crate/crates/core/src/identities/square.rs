use super::double_sum::admissible_abscissa;
use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::quadrature::{truncation_height, try_integrate_vertical_line, ContourSpec};
use crate::report::{Cost, IdentityReport, Params};
use crate::special::{hurwitz_zeta1, ln_gamma, riemann_zeta};
use crate::{c64, C64};

/// `|zeta1(s, a)|^2` against `zeta1(2 sigma, a)` plus the Mellin-Barnes
/// integral with kernel `Gamma(s+z)/Gamma(s) + Gamma(conj s+z)/Gamma(conj s)`.
pub fn verify_square_identity(s: C64, alpha: f64, c: Option<f64>, cfg: &EvalConfig) -> Result<IdentityReport> {
    if !(s.re > 1.0) {
        return Err(Error::Domain { function: "verify_square_identity", reason: "requires sigma > 1" });
    }
    if !(s.im >= 0.0) {
        return Err(Error::Domain { function: "verify_square_identity", reason: "requires t >= 0" });
    }
    let sb = s.conj();
    let (lo, hi) = admissible_abscissa(s, sb)
        .ok_or(Error::Domain { function: "verify_square_identity", reason: "empty admissible strip" })?;
    let c = c.unwrap_or(0.5 * (lo + hi));
    if !(c > lo && c < hi) {
        return Err(Error::Domain { function: "verify_square_identity", reason: "abscissa outside the admissible strip" });
    }
    let z1 = hurwitz_zeta1(s, alpha, cfg)?;
    let lhs = c64(z1.norm_sqr(), 0.0);
    let two_sigma = c64(2.0 * s.re, 0.0);
    let lg_s = ln_gamma(s)?;
    let lg_sb = ln_gamma(sb)?;
    let spec = ContourSpec::new(c, truncation_height(cfg.abs_tol, 2.0 + s.re) + s.im.abs(), (c - lo).min(hi - c));
    let r = try_integrate_vertical_line(
        |z| {
            let lg_mz = ln_gamma(-z)?;
            let k = (ln_gamma(s + z)? - lg_s + lg_mz).exp() + (ln_gamma(sb + z)? - lg_sb + lg_mz).exp();
            Ok(k * riemann_zeta(-z, cfg)? * hurwitz_zeta1(two_sigma + z, alpha, cfg)?)
        },
        &spec,
        cfg,
    )?;
    let rhs = hurwitz_zeta1(two_sigma, alpha, cfg)? + r.value;
    let params = Params::new().with("s", s).with("alpha", alpha).with("c", c);
    Ok(IdentityReport::new("square_identity", params, lhs, rhs, Cost { evaluations: r.evaluations })
        .with_metric("quad_error", r.error))
}
