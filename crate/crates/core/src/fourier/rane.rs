use alloc::vec::Vec;

use super::TailEstimate;
use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::report::{Cost, IdentityReport, Params};
use crate::special::{exp_integral_tail, hurwitz_zeta, hurwitz_zeta1_remainder, pochhammer, rpow};
use crate::sum::ComplexSum;
use crate::{c64, C64, TAU};

fn check(s: C64, alpha: f64) -> Result<()> {
    if !(s.re > 0.0) {
        return Err(Error::Domain { function: "rane_representation", reason: "requires Re s > 0" });
    }
    if !(alpha > 0.0) {
        return Err(Error::Domain { function: "rane_representation", reason: "requires alpha > 0" });
    }
    if s.re == 1.0 && s.im == 0.0 {
        return Err(Error::Pole { function: "rane_representation", at: s });
    }
    Ok(())
}

/// `sum_{0<|m|<M} (int_a^oo x^-s e^{2 pi i m x} dx) e^{-2 pi i m a}`.
pub fn rane_oscillatory_sum(s: C64, alpha: f64, m: u64, cfg: &EvalConfig) -> Result<(C64, usize)> {
    check(s, alpha)?;
    let scale = rpow(alpha, c64(1.0, 0.0) - s);
    let mut acc = ComplexSum::new();
    let mut evals = 0;
    for k in 1..m {
        for sign in [1.0, -1.0] {
            let kk = sign * k as f64;
            let e = exp_integral_tail(-kk * alpha, s, cfg)?;
            evals += e.evaluations;
            let (sn, cs) = (-TAU * kk * alpha).sin_cos();
            acc.add(e.value * c64(cs, sn));
        }
    }
    Ok((scale * acc.value(), evals))
}

/// Asymptotic value of the `|m| >= M` part of the oscillatory sum,
/// `sum_l 2 (-1)^l (s)_{2l+1} a^{-s-2l-1} zeta(2l+2, M) / (2 pi)^{2l+2}`.
pub fn rane_tail_correction(s: C64, alpha: f64, m: u64, cfg: &EvalConfig) -> Result<C64> {
    check(s, alpha)?;
    let big_m = m.max(1) as f64;
    let mut acc = ComplexSum::new();
    let mut prev = f64::INFINITY;
    for l in 0..30 {
        let k = 2 * l + 2;
        let sign = if l % 2 == 0 { 2.0 } else { -2.0 };
        let z = hurwitz_zeta(c64(k as f64, 0.0), big_m, cfg)?.re;
        let term = pochhammer(s, k - 1) * rpow(alpha, -s - (k - 1) as f64) * (sign * z / TAU.powi(k as i32));
        let size = term.norm();
        // asymptotic series: stop at the smallest term
        if size > prev {
            break;
        }
        acc.add(term);
        if size <= 1e-17 * acc.value().norm() {
            break;
        }
        prev = size;
    }
    Ok(acc.value())
}

/// Uncorrected symmetric partial sum of the representation
/// `zeta1(s,a) = a^(1-s)/(s-1) - a^(-s)/2 + lim sum_{0<|m|<M} ...`.
pub fn rane_partial_sum(s: C64, alpha: f64, m: u64, cfg: &EvalConfig) -> Result<C64> {
    let (osc, _) = rane_oscillatory_sum(s, alpha, m, cfg)?;
    let xs = rpow(alpha, -s);
    Ok(xs * alpha / (s - 1.0) - xs * 0.5 + osc)
}

/// Partial sum with the `|m| >= M` remainder added back from its expansion.
///
/// The expansion needs the dropped frequencies to be free of stationary
/// points on `[a, oo)`, i.e. `2 pi M a` well above `|t|`; below that the
/// result is only as good as the uncorrected partial sum.
pub fn rane_representation(s: C64, alpha: f64, m: u64, cfg: &EvalConfig) -> Result<C64> {
    Ok(rane_partial_sum(s, alpha, m, cfg)? + rane_tail_correction(s, alpha, m, cfg)?)
}

const LEMMA_TERMS: u64 = 64;

/// The oscillatory sum at `a >= t/2pi + eta` against the envelope
/// `t a^(-sigma-1)`, and its derivative against `t^2 a^(-sigma-2)`.
///
/// `lhs` is the `M -> oo` limit, which equals `R(s, a)`; `rhs` the
/// corrected partial sum with 64 frequencies. Metrics `ratio` and
/// `derivative_ratio` hold the envelope ratios.
pub fn tail_lemma_check(s: C64, alpha: f64, eta: f64, cfg: &EvalConfig) -> Result<IdentityReport> {
    let t = s.im.abs();
    if !(t > 0.0) {
        return Err(Error::Domain { function: "tail_lemma_check", reason: "requires t > 0" });
    }
    super::qn::check_eta(eta)?;
    if alpha < t / TAU + eta {
        return Err(Error::Domain { function: "tail_lemma_check", reason: "requires alpha >= t/2pi + eta" });
    }
    let limit = hurwitz_zeta1_remainder(s, alpha, cfg)?;
    let (osc, evals) = rane_oscillatory_sum(s, alpha, LEMMA_TERMS, cfg)?;
    let partial = osc + rane_tail_correction(s, alpha, LEMMA_TERMS, cfg)?;
    let derivative = -s * hurwitz_zeta1_remainder(s + 1.0, alpha, cfg)?;
    let ratio = limit.norm() / (t * alpha.powf(-s.re - 1.0));
    let dratio = derivative.norm() / (t * t * alpha.powf(-s.re - 2.0));
    let params = Params::new().with("s", s).with("alpha", alpha).with("eta", eta);
    Ok(IdentityReport::new("tail_lemma", params, limit, partial, Cost { evaluations: evals })
        .with_metric("ratio", ratio)
        .with_metric("derivative_ratio", dratio))
}

/// Largest envelope ratio of [`tail_lemma_check`] over `alphas`.
pub fn tail_lemma_estimate(s: C64, eta: f64, alphas: &[f64], cfg: &EvalConfig) -> Result<TailEstimate> {
    let mut worst = 0.0f64;
    let mut worst_d = 0.0f64;
    let mut samples = Vec::with_capacity(alphas.len());
    for &a in alphas {
        let r = tail_lemma_check(s, a, eta, cfg)?;
        let ratio = r.metric("ratio").unwrap_or(f64::NAN);
        worst = worst.max(ratio);
        worst_d = worst_d.max(r.metric("derivative_ratio").unwrap_or(f64::NAN));
        samples.push((a, ratio));
    }
    Ok(TailEstimate {
        eta,
        bound_constant: worst,
        derivative_constant: worst_d,
        claimed_order: "t a^(-sigma-1)",
        samples,
    })
}
