//! Independent two-sided verification of the double-sum contour identity,
//! the moment identities for products of `zeta1`, and the mean-square
//! formula for the modified Hurwitz zeta function.

mod double_sum;
mod katsurada;
mod moments;
mod square;

pub use double_sum::{admissible_abscissa, f_contour, f_series, f_series_with_error};
pub use katsurada::{
    i1_asymptotic_check, katsurada_split_check, mellin_tail_closed_form, mellin_tail_quadrature, remark_219_check,
    remark_219_sum, unit_interval_recursion, verify_katsurada,
};
pub use moments::{
    decomposition_check, moment_rhs_terms, verify_moment, verify_quadratic_moment, verify_quadruple_moment,
    verify_triple_moment, MomentParams,
};
pub use square::verify_square_identity;

use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::quadrature::{try_integrate_with_breaks, QuadResult};
use crate::{c64, C64, PI};
use alloc::vec::Vec;

/// `int_0^1 a^(-p) f(a) da` for `Re p < 1`.
///
/// Substitutes `a = e^{-x}` so the endpoint singularity becomes an
/// exponentially damped tail. `rate` bounds the angular oscillation rate of
/// `f` in `a`.
pub(crate) fn unit_power_integral<F>(mut f: F, p: C64, rate: f64, cfg: &EvalConfig) -> Result<QuadResult>
where
    F: FnMut(f64) -> Result<C64>,
{
    let lambda = 1.0 - p.re;
    if !(lambda > 0.0) {
        return Err(Error::Domain { function: "unit_power_integral", reason: "requires Re p < 1" });
    }
    let scale = f(0.5)?.norm().max(f(1e-12)?.norm()).max(1e-300);
    let target = cfg.target(scale * 1e-3).max(1e-300);
    let x_end = ((scale / (lambda * target)).ln() / lambda).max(2.0) + 1.0;
    let w = (PI / p.im.abs().max(1e-300)).min(PI / rate.max(1e-300)).min(1.0);
    let n = ((x_end / w).ceil() as usize).max(4);
    let breaks: Vec<f64> = (0..=n).map(|k| x_end * k as f64 / n as f64).collect();
    let q = c64(1.0, 0.0) - p;
    let r = try_integrate_with_breaks(
        |x| {
            let a = (-x).exp();
            Ok((-q * x).exp() * f(a)?)
        },
        &breaks,
        cfg,
    )?;
    let tail = scale * (-lambda * x_end).exp() / lambda;
    Ok(QuadResult { error: r.error + tail, ..r })
}
