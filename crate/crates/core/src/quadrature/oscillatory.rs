use alloc::vec::Vec;

use super::gk::try_integrate_with_breaks;
use super::{infallible, QuadResult};
use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::{c64, C64, PI, TAU};

/// Phase `2 pi nu x + tau ln x` multiplying a slowly varying amplitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscSpec {
    pub frequency: f64,
    pub log_coefficient: f64,
    /// Extra oscillation of the amplitude, of local rate `rate / (x + shift)`.
    pub companion_rate: f64,
    pub companion_shift: f64,
}

impl OscSpec {
    pub fn new(frequency: f64, log_coefficient: f64) -> Self {
        Self { frequency, log_coefficient, companion_rate: 0.0, companion_shift: 0.0 }
    }

    pub fn with_companion(mut self, rate: f64, shift: f64) -> Self {
        self.companion_rate = rate;
        self.companion_shift = shift;
        self
    }

    /// Upper bound for the local angular rate at `x`.
    pub fn rate(&self, x: f64) -> f64 {
        let mut r = (TAU * self.frequency).abs();
        if self.log_coefficient != 0.0 {
            r = r.max(self.log_coefficient.abs() / x);
        }
        if self.companion_rate != 0.0 {
            r = r.max(self.companion_rate.abs() / (x + self.companion_shift));
        }
        r
    }

    #[inline]
    pub fn phase(&self, x: f64) -> f64 {
        let mut p = TAU * self.frequency * x;
        if self.log_coefficient != 0.0 {
            p += self.log_coefficient * x.ln();
        }
        p
    }
}

/// Panel edges on `[a, b]` so that every panel spans at most half a local period.
pub fn oscillatory_breaks(osc: &OscSpec, a: f64, b: f64, max_panels: usize) -> Result<Vec<f64>> {
    let mut breaks = Vec::new();
    breaks.push(a);
    let mut x = a;
    while x < b {
        let mut w = PI / osc.rate(x).max(1e-300);
        // the rate is monotone on each panel, so the right end bounds it too
        let r_end = osc.rate((x + w).min(b));
        if r_end * w > PI {
            w = PI / r_end;
        }
        x = (x + w).min(b);
        breaks.push(x);
        if breaks.len() > max_panels {
            return Err(Error::Convergence { evaluations: 0, estimate: f64::INFINITY, target: 0.0 });
        }
    }
    Ok(breaks)
}

/// `int_a^b f(x) e^{i (2 pi nu x + tau ln x)} dx` with wavelength-sized panels.
pub fn try_integrate_oscillatory<F>(mut f: F, osc: &OscSpec, a: f64, b: f64, cfg: &EvalConfig) -> Result<QuadResult>
where
    F: FnMut(f64) -> Result<C64>,
{
    if osc.log_coefficient != 0.0 && !(a > 0.0) {
        return Err(Error::Domain { function: "integrate_oscillatory", reason: "logarithmic phase needs a > 0" });
    }
    if !(b >= a) {
        return Err(Error::Domain { function: "integrate_oscillatory", reason: "requires a <= b" });
    }
    let breaks = oscillatory_breaks(osc, a, b, cfg.max_subdivisions)?;
    try_integrate_with_breaks(
        |x| {
            let (s, c) = osc.phase(x).sin_cos();
            Ok(f(x)? * c64(c, s))
        },
        &breaks,
        cfg,
    )
}

/// Infallible-amplitude version of [`try_integrate_oscillatory`].
pub fn integrate_oscillatory<F>(f: F, osc: &OscSpec, a: f64, b: f64, cfg: &EvalConfig) -> Result<QuadResult>
where
    F: FnMut(f64) -> C64,
{
    try_integrate_oscillatory(infallible(f), osc, a, b, cfg)
}
