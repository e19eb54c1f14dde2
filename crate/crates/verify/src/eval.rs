//! Single-point evaluation behind `zeta-verify eval`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use zeta_core::afe::{power_mean_ik, power_mean_jk, s1_sum};
use zeta_core::fourier::{qn_continued, qn_direct};
use zeta_core::special::{chi, dirichlet_kernel, fourier_coeff_a, gamma_with_error, hurwitz_zeta1_with_error, riemann_zeta_with_error};
use zeta_core::{EvalConfig, C64};

use crate::error::{Result, VerifyError};

pub const FUNCTIONS: [&str; 10] = ["zeta", "zeta1", "chi", "gamma", "B_N", "a_n", "q_n", "S1", "I_k", "J_k"];

/// Arguments of `eval`; each function reads the ones it needs.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct EvalArgs {
    pub s: Option<C64>,
    pub z: Option<C64>,
    pub u: Option<C64>,
    pub v: Option<C64>,
    pub alpha: Option<f64>,
    pub sigma: Option<f64>,
    pub t: Option<f64>,
    pub big_t: Option<f64>,
    pub n: Option<i64>,
    pub big_n: Option<u64>,
    pub k: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Evaluated {
    pub re: f64,
    pub im: f64,
    /// Absolute error estimate where the kernel provides one.
    pub error: Option<f64>,
}

impl fmt::Display for Evaluated {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.im.is_sign_negative() { '-' } else { '+' };
        write!(f, "{} {} {}i", self.re, sign, self.im.abs())?;
        match self.error {
            Some(e) => write!(f, "  (error {e:.3e})"),
            None => write!(f, "  (error n/a)"),
        }
    }
}

/// Parses `2`, `0.5+14.1i`, `-1-2i`, `3i`.
pub fn parse_complex(text: &str) -> Result<C64> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    C64::from_str(&t).map_err(|_| VerifyError::config(format!("cannot parse complex number `{text}`")))
}

fn need<T>(v: Option<T>, name: &str, function: &str) -> Result<T> {
    v.ok_or_else(|| VerifyError::config(format!("{function} needs --{name}")))
}

fn value(z: C64, error: Option<f64>) -> Evaluated {
    Evaluated { re: z.re, im: z.im, error }
}

pub fn evaluate(function: &str, a: &EvalArgs, cfg: &EvalConfig) -> Result<Evaluated> {
    let f = function;
    let out = match f {
        "zeta" => {
            let e = riemann_zeta_with_error(need(a.s, "s", f)?, cfg)?;
            value(e.value, Some(e.error))
        }
        "zeta1" => {
            let e = hurwitz_zeta1_with_error(need(a.s, "s", f)?, need(a.alpha, "alpha", f)?, cfg)?;
            value(e.value, Some(e.error))
        }
        "chi" => value(chi(need(a.s, "s", f)?)?, None),
        "gamma" => {
            let (g, e) = gamma_with_error(need(a.z.or(a.s), "z", f)?)?;
            value(g, Some(e))
        }
        "B_N" => value(dirichlet_kernel(need(a.big_n, "N", f)?, need(a.alpha, "alpha", f)?), None),
        "a_n" => value(fourier_coeff_a(need(a.n, "n", f)?, need(a.s, "s", f)?, cfg)?, None),
        "q_n" => {
            let u = need(a.u, "u", f)?;
            let v = a.v.unwrap_or(u.conj());
            let n = need(a.n, "n", f)?;
            let q = if u.re > 1.0 && v.re > 1.0 { qn_direct(n, u, v, cfg)? } else { qn_continued(n, u, v, cfg)? };
            value(q, None)
        }
        "S1" => value(s1_sum(need(a.sigma, "sigma", f)?, need(a.t, "t", f)?, need(a.alpha, "alpha", f)?), None),
        "I_k" => {
            let p = power_mean_ik(need(a.k, "k", f)?, need(a.t, "t", f)?, cfg)?;
            value(C64::new(p.value, 0.0), Some(p.error))
        }
        "J_k" => {
            let p = power_mean_jk(need(a.k, "k", f)?, need(a.big_t, "T", f)?, cfg)?;
            value(C64::new(p.value, 0.0), Some(p.error))
        }
        _ => return Err(VerifyError::config(format!("unknown function `{f}`; expected one of {}", FUNCTIONS.join(", ")))),
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_forms() {
        assert_eq!(parse_complex("2").unwrap(), C64::new(2.0, 0.0));
        assert_eq!(parse_complex("0.5+14i").unwrap(), C64::new(0.5, 14.0));
        assert_eq!(parse_complex(" -1 - 2i").unwrap(), C64::new(-1.0, -2.0));
        assert_eq!(parse_complex("3i").unwrap(), C64::new(0.0, 3.0));
        assert!(parse_complex("abc").is_err());
    }
}
