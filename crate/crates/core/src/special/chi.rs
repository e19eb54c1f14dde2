use crate::error::{Error, Result};
use crate::special::cmath::{ln_cos, ln_sin};
use crate::special::gamma::ln_gamma;
use crate::{c64, C64, PI, TAU};

/// `ln chi(s)` where `zeta(s) = chi(s) zeta(1 - s)`; `None` where `chi` vanishes.
pub fn ln_chi(s: C64) -> Result<Option<C64>> {
    if s.im == 0.0 && s.re > 0.0 && s.re == s.re.round() && (s.re as i64) % 2 == 1 {
        return Err(Error::Pole { function: "chi", at: s });
    }
    if s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round() && (s.re as i64) % 2 == 0 {
        return Ok(None);
    }
    let half = s * (PI / 2.0);
    if s.re >= 0.5 {
        // chi(s) = (2 pi)^s / (2 cos(pi s / 2) Gamma(s))
        Ok(Some(s * TAU.ln() - 2f64.ln() - ln_cos(half) - ln_gamma(s)?))
    } else {
        // chi(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1 - s)
        Ok(Some(s * 2f64.ln() + (s - 1.0) * PI.ln() + ln_sin(half) + ln_gamma(c64(1.0, 0.0) - s)?))
    }
}

/// Functional-equation factor `chi(s)`.
pub fn chi(s: C64) -> Result<C64> {
    Ok(match ln_chi(s)? {
        Some(l) => l.exp(),
        None => c64(0.0, 0.0),
    })
}
