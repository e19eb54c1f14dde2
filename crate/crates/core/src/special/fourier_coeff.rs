use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::quadrature::{try_integrate_oscillatory, try_integrate_ray, OscSpec, QuadResult};
use crate::special::cmath::pochhammer;
use crate::sum::ComplexSum;
use crate::{c64, C64, TAU};

/// `E(nu, s) = int_1^oo y^(-s) e^{-2 pi i nu y} dy` for real `nu != 0`,
/// continued to all `s` by integration by parts.
///
/// The path is deformed into the half plane where the exponential decays:
/// through the saddle of `y^(-s) e^{-2 pi i nu y}` when it lies to the right
/// of 1, and straight up from `y = 1` otherwise.
pub fn exp_integral_tail(nu: f64, s: C64, cfg: &EvalConfig) -> Result<QuadResult> {
    if nu == 0.0 || !nu.is_finite() {
        return Err(Error::Domain { function: "exp_integral_tail", reason: "frequency must be a non-zero finite number" });
    }
    if nu > 0.0 {
        let r = exp_integral_tail(-nu, s.conj(), cfg)?;
        return Ok(QuadResult { value: r.value.conj(), ..r });
    }
    let mu = -nu;
    if s.re <= 1.0 {
        // E(nu, s) = e^{-2 pi i nu} / (2 pi i nu) - s / (2 pi i nu) E(nu, s + 1)
        let k = c64(0.0, TAU * nu);
        let boundary = c64(0.0, -TAU * nu).exp() / k;
        let rest = exp_integral_tail(nu, s + 1.0, cfg)?;
        return Ok(QuadResult {
            value: boundary - s / k * rest.value,
            error: (s / k).norm() * rest.error,
            evaluations: rest.evaluations,
        });
    }
    upper_path(mu, s, cfg)
}

// int_1^oo y^(-s) e^{2 pi i mu y} dy, mu > 0, Re s > 1.
fn upper_path(mu: f64, s: C64, cfg: &EvalConfig) -> Result<QuadResult> {
    let k = TAU * mu;
    let f = |y: C64| (-s * y.ln() + c64(0.0, k) * y).exp();
    let saddle = s.im / k;
    if saddle > 1.0 {
        let seg = try_integrate_oscillatory(
            |y| Ok(c64(y.powf(-s.re), 0.0)),
            &OscSpec::new(mu, -s.im),
            1.0,
            saddle,
            cfg,
        )?;
        let dir = c64(0.0, core::f64::consts::FRAC_PI_4).exp();
        let width = (saddle / s.im.sqrt()).min(1.0 / k) * 0.5;
        let ray = try_integrate_ray(|r| Ok(f(saddle + dir * r) * dir), width, cfg)?;
        Ok(seg.combine(ray))
    } else {
        let i = c64(0.0, 1.0);
        let ray = try_integrate_ray(|y| Ok(f(c64(1.0, y)) * i), 0.5 / k, cfg)?;
        Ok(ray)
    }
}

/// Fourier coefficient `a_n(s) = int_1^oo a^(-s) e^{-2 pi i n a} da`.
///
/// `a_0(s) = 1 / (s - 1)`, continued to every `s != 1`; for `n != 0` the integration-by-parts continuation
/// extends the coefficient to `Re s <= 1`.
pub fn fourier_coeff_a(n: i64, s: C64, cfg: &EvalConfig) -> Result<C64> {
    if n == 0 {
        if s.re == 1.0 && s.im == 0.0 {
            return Err(Error::Pole { function: "fourier_coeff_a", at: s });
        }
        return Ok(c64(1.0, 0.0) / (s - 1.0));
    }
    exp_integral_tail(n as f64, s, cfg).map(|r| r.value)
}

/// Large-`|n|` expansion `a_n(s) ~ sum_j (-1)^j (s)_j / (2 pi i n)^(j+1)`.
pub fn fourier_coeff_a_asymptotic(n: i64, s: C64, terms: usize) -> C64 {
    let k = c64(0.0, TAU * n as f64);
    let mut acc = ComplexSum::new();
    let mut kp = k;
    let mut sign = 1.0;
    for j in 0..terms {
        acc.add(pochhammer(s, j) * sign / kp);
        kp *= k;
        sign = -sign;
    }
    acc.value()
}
