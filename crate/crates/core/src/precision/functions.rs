use alloc::vec::Vec;

use super::{Dd, DdComplex};
use crate::error::{Error, Result};
use crate::special::bernoulli_rational;
use crate::C64;
use num_bigint::BigInt;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

const STIRLING_TERMS: usize = 30;

fn bigint_to_dd(n: &BigInt) -> Dd {
    let hi = n.to_f64().unwrap_or(f64::INFINITY);
    if !hi.is_finite() {
        return Dd::new(hi);
    }
    let rest = n - BigInt::from_f64(hi).unwrap_or_default();
    Dd { hi, lo: 0.0 } + Dd::new(rest.to_f64().unwrap_or(0.0))
}

/// `B_2, B_4, ..., B_{2m}` in double-double.
fn bernoulli_dd(m: usize) -> Vec<Dd> {
    let exact = bernoulli_rational(2 * m);
    (1..=m)
        .map(|k| {
            let b = &exact[2 * k];
            let (n, d) = (b.numer(), b.denom());
            let v = bigint_to_dd(&n.abs()) / bigint_to_dd(d);
            if n.is_negative() {
                -v
            } else {
                v
            }
        })
        .collect()
}

/// `zeta1(s, a)` in double-double by Euler-Maclaurin with exact Bernoulli
/// numbers, for `a >= 0` and `Re s > -10`.
pub fn zeta1_dd(s: C64, alpha: f64) -> Result<DdComplex> {
    if s.re == 1.0 && s.im == 0.0 {
        return Err(Error::Pole { function: "zeta1_dd", at: s });
    }
    if !(alpha >= 0.0) || !(s.re > -10.0) {
        return Err(Error::Domain { function: "zeta1_dd", reason: "requires alpha >= 0 and Re s > -10" });
    }
    let p = STIRLING_TERMS;
    let sd = DdComplex::from(s);
    let a = Dd::new(alpha);
    // N with the remainder bound below 1e-33 of the leading term
    let mut n = (s.norm().ceil() as usize + 10).max(20);
    loop {
        let x = n as f64 + alpha;
        let mut ratio = 1.0f64;
        for j in 0..2 * p {
            ratio *= (s + j as f64).norm() / (core::f64::consts::TAU * x);
        }
        if ratio * x * x <= 1e-34 || n > 100_000 {
            break;
        }
        n += n / 2;
    }
    let mut acc = DdComplex::ZERO;
    for k in 1..n {
        let base = Dd::new(k as f64) + a;
        acc = acc + DdComplex::rpow(base, -sd);
    }
    let x = Dd::new(n as f64) + a;
    let xs = DdComplex::rpow(x, -sd);
    let one = DdComplex::ONE;
    acc = acc + xs.scale(x) / (sd - one) + xs.scale(Dd::new(0.5));
    let b = bernoulli_dd(p);
    // (s)_{2k-1} x^{-s-2k+1} / (2k)!
    let inv_x = Dd::ONE / x;
    let mut c = sd.scale(inv_x.ldexp(-1));
    for (k, bk) in b.iter().enumerate().map(|(i, b)| (i + 1, b)) {
        acc = acc + (c * xs).scale(*bk);
        let kf = k as f64;
        let step = (sd + DdComplex::from_real(Dd::new(2.0 * kf - 1.0))) * (sd + DdComplex::from_real(Dd::new(2.0 * kf)));
        c = c * step.scale(inv_x.sqr() / Dd::new((2.0 * kf + 1.0) * (2.0 * kf + 2.0)));
    }
    Ok(acc)
}

/// `ln Gamma(z)` in double-double for `Re z > 0`, by Stirling's series after
/// shifting to `|z| >= 40`. The imaginary part follows the continuous branch.
pub fn ln_gamma_dd(z: C64) -> Result<DdComplex> {
    if !(z.re > 0.0) {
        return Err(Error::Domain { function: "ln_gamma_dd", reason: "requires Re z > 0" });
    }
    let mut w = DdComplex::from(z);
    let mut shift = DdComplex::ZERO;
    while w.norm().to_f64() < 40.0 {
        shift = shift + w.ln();
        w = w + DdComplex::ONE;
    }
    let half = Dd::new(0.5);
    let ln2pi = (Dd::pi().ldexp(1)).ln();
    let mut v = (w - DdComplex::from_real(half)) * w.ln() - w + DdComplex::from_real(ln2pi.ldexp(-1));
    let b = bernoulli_dd(STIRLING_TERMS);
    let inv = DdComplex::ONE / w;
    let inv2 = inv * inv;
    let mut pw = inv;
    for (k, bk) in b.iter().enumerate().map(|(i, b)| (i + 1, b)) {
        let kf = k as f64;
        v = v + pw.scale(*bk / Dd::new(2.0 * kf * (2.0 * kf - 1.0)));
        pw = pw * inv2;
    }
    Ok(v - shift)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_two_is_pi_squared_over_six() {
        let z = zeta1_dd(C64::new(2.0, 0.0), 0.0).unwrap();
        let pi = Dd::pi();
        let want = pi * pi / Dd::new(6.0);
        assert!((z.re - want).abs().to_f64() < 1e-30);
        assert!(z.im.abs().to_f64() < 1e-30);
    }

    #[test]
    fn zeta_minus_one() {
        // the partial sum is about N^2 / 2, so expect ~1e-29 after cancellation
        let z = zeta1_dd(C64::new(-1.0, 0.0), 0.0).unwrap();
        let err = (z.re + Dd::ONE / Dd::new(12.0)).abs().to_f64();
        assert!(err < 1e-28, "{err:e}");
    }

    #[test]
    fn gamma_half_and_integers() {
        // ln Gamma(1/2) = ln(pi) / 2
        let g = ln_gamma_dd(C64::new(0.5, 0.0)).unwrap();
        assert!((g.re - Dd::pi().ln().ldexp(-1)).abs().to_f64() < 1e-30);
        // ln Gamma(11) = ln(3628800)
        let g = ln_gamma_dd(C64::new(11.0, 0.0)).unwrap();
        assert!((g.re - Dd::new(3628800.0).ln()).abs().to_f64() < 1e-29);
    }
}
