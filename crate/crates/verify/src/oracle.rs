//! Standard precision against the double-double tier at seeded random points.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zeta_core::precision::{ln_gamma_dd, zeta1_dd};
use zeta_core::special::{gamma_with_error, hurwitz_zeta1_with_error};
use zeta_core::{Cost, EvalConfig, IdentityReport, Params, Result, C64};

use crate::grid::Point;

const SEED: u64 = 0x7a65_7461;

/// The sample point for index `n`: `(s, alpha, z)`.
pub fn sample(n: u64) -> (C64, f64, C64) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ n.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let s = C64::new(rng.gen_range(0.05..3.0), rng.gen_range(-60.0..60.0));
    let alpha = rng.gen_range(0.0..2.0);
    let z = C64::new(rng.gen_range(0.05..12.0), rng.gen_range(-40.0..40.0));
    (s, alpha, z)
}

/// `lhs` is `zeta1(s, alpha)` in standard precision, `rhs` its double-double
/// value. `err_ratio` is the larger of `|f64 - dd| / reported error` over
/// `zeta1` and `Gamma`; at most 1 means the reported errors are honest.
pub fn evaluate(p: &Point, cfg: &EvalConfig) -> Result<IdentityReport> {
    let n = p.get("n").unwrap_or(0.0).max(0.0) as u64;
    let (s, alpha, z) = sample(n);
    let e = hurwitz_zeta1_with_error(s, alpha, cfg)?;
    let dd = zeta1_dd(s, alpha)?.to_c64();
    let (g, g_err) = gamma_with_error(z)?;
    let g_dd = ln_gamma_dd(z)?.exp().to_c64();
    let ratio = |d: f64, err: f64| if d == 0.0 { 0.0 } else { d / err };
    let zr = ratio((e.value - dd).norm(), e.error);
    let gr = ratio((g - g_dd).norm(), g_err);
    let params = Params::new().with("s", s).with("alpha", alpha).with("z", z);
    Ok(IdentityReport::new("oracle_precision", params, e.value, dd, Cost { evaluations: e.terms })
        .with_metric("zeta1_error", e.error)
        .with_metric("gamma_error", g_err)
        .with_metric("err_ratio", zr.max(gr)))
}
