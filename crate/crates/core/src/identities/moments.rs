use alloc::vec::Vec;

use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::identities::double_sum::f_series;
use crate::quadrature::{try_integrate_oscillatory, try_integrate_semi_infinite, OscSpec, QuadResult};
use crate::report::{Cost, IdentityReport, ParamValue, Params};
use crate::special::{hurwitz_zeta1, rpow};
use crate::sum::ComplexSum;
use crate::{c64, C64};

/// Exponents `u_1, ..., u_k` of a moment identity, `2 <= k <= 4`.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentParams {
    pub us: Vec<C64>,
}

impl MomentParams {
    pub fn new(us: &[C64]) -> Result<Self> {
        if !(2..=4).contains(&us.len()) {
            return Err(Error::Domain { function: "MomentParams", reason: "needs between 2 and 4 exponents" });
        }
        Ok(Self { us: us.to_vec() })
    }

    fn check_direct(&self) -> Result<()> {
        if let Some(u) = self.us.iter().find(|u| !(u.re > 1.0)) {
            return Err(Error::Divergence { decay: u.re });
        }
        Ok(())
    }

    fn params(&self) -> Params {
        const NAMES: [&str; 4] = ["u1", "u2", "u3", "u4"];
        let mut p = Params::new();
        for (name, u) in NAMES.iter().zip(&self.us) {
            p.0.push((name, ParamValue::Complex(*u)));
        }
        p
    }
}

/// Number of summands on the right-hand side of the `k`-fold moment identity:
/// the rational term plus one tail integral per non-empty proper subset.
pub fn moment_rhs_terms(k: usize) -> usize {
    (1usize << k) - 1
}

fn oscillation_rate(us: &[C64]) -> f64 {
    us.iter().map(|u| u.im.abs()).sum()
}

/// `int_0^1 prod_i zeta1(u_i, a) da`.
fn product_integral(us: &[C64], cfg: &EvalConfig) -> Result<QuadResult> {
    let osc = OscSpec::new(0.0, 0.0).with_companion(oscillation_rate(us), 1.0);
    try_integrate_oscillatory(
        |a| {
            let mut p = c64(1.0, 0.0);
            for u in us {
                p *= hurwitz_zeta1(*u, a, cfg)?;
            }
            Ok(p)
        },
        &osc,
        0.0,
        1.0,
        cfg,
    )
}

/// `int_1^oo a^{-w} prod_j zeta1(u_j, a) da`.
fn tail_integral(w: C64, zs: &[C64], cfg: &EvalConfig) -> Result<QuadResult> {
    let decay = w.re + zs.iter().map(|u| u.re - 1.0).sum::<f64>();
    try_integrate_semi_infinite(
        |a| {
            let mut p = rpow(a, -w);
            for u in zs {
                p *= hurwitz_zeta1(*u, a, cfg)?;
            }
            Ok(p)
        },
        1.0,
        decay,
        cfg,
    )
}

/// Right-hand side of the `k`-fold moment identity and its summand count.
fn moment_rhs(us: &[C64], cfg: &EvalConfig) -> Result<(C64, usize, QuadResult)> {
    let k = us.len();
    let total: C64 = us.iter().sum();
    let mut acc = ComplexSum::new();
    acc.add(c64(1.0, 0.0) / (total - 1.0));
    let mut terms = 1;
    let mut quad = QuadResult::ZERO;
    for mask in 1..(1u32 << k) - 1 {
        let mut w = c64(0.0, 0.0);
        let mut zs = Vec::with_capacity(k);
        for (i, u) in us.iter().enumerate() {
            if mask & (1 << i) != 0 {
                w += u;
            } else {
                zs.push(*u);
            }
        }
        let r = tail_integral(w, &zs, cfg)?;
        acc.add(r.value);
        quad = quad.combine(r);
        terms += 1;
    }
    Ok((acc.value(), terms, quad))
}

/// Moment identity for `k = 2, 3, 4` factors of `zeta1`.
pub fn verify_moment(p: &MomentParams, cfg: &EvalConfig) -> Result<IdentityReport> {
    p.check_direct()?;
    let id = match p.us.len() {
        2 => "quadratic_moment",
        3 => "triple_moment",
        _ => "quadruple_moment",
    };
    let lhs = product_integral(&p.us, cfg)?;
    let (rhs, terms, quad) = moment_rhs(&p.us, cfg)?;
    Ok(IdentityReport::new(
        id,
        p.params(),
        lhs.value,
        rhs,
        Cost { evaluations: lhs.evaluations + quad.evaluations },
    )
    .with_metric("rhs_terms", terms as f64)
    .with_metric("quad_error", lhs.error + quad.error))
}

/// `int_0^1 zeta1(u) zeta1(v) = 1/(u+v-1) + int_1^oo a^{-v} zeta1(u) + int_1^oo a^{-u} zeta1(v)`.
pub fn verify_quadratic_moment(p: &MomentParams, cfg: &EvalConfig) -> Result<IdentityReport> {
    if p.us.len() != 2 {
        return Err(Error::Domain { function: "verify_quadratic_moment", reason: "needs two exponents" });
    }
    verify_moment(p, cfg)
}

/// Three-factor moment identity with seven right-hand summands.
pub fn verify_triple_moment(p: &MomentParams, cfg: &EvalConfig) -> Result<IdentityReport> {
    if p.us.len() != 3 {
        return Err(Error::Domain { function: "verify_triple_moment", reason: "needs three exponents" });
    }
    verify_moment(p, cfg)
}

/// Four-factor moment identity with `1 + 4 + 6 + 4` right-hand summands.
pub fn verify_quadruple_moment(p: &MomentParams, cfg: &EvalConfig) -> Result<IdentityReport> {
    if p.us.len() != 4 {
        return Err(Error::Domain { function: "verify_quadruple_moment", reason: "needs four exponents" });
    }
    verify_moment(p, cfg)
}

/// Pointwise `zeta1(u,a) zeta1(v,a) = zeta1(u+v,a) + f(u,v,a) + f(v,u,a)`.
pub fn decomposition_check(u: C64, v: C64, alpha: f64, cfg: &EvalConfig) -> Result<IdentityReport> {
    let lhs = hurwitz_zeta1(u, alpha, cfg)? * hurwitz_zeta1(v, alpha, cfg)?;
    let rhs = hurwitz_zeta1(u + v, alpha, cfg)? + f_series(u, v, alpha, cfg)? + f_series(v, u, alpha, cfg)?;
    let params = Params::new().with("u", u).with("v", v).with("alpha", alpha);
    Ok(IdentityReport::new("product_decomposition", params, lhs, rhs, Cost::default()))
}
