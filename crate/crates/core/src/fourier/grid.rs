use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::quadrature::GaussLegendre;
use crate::sum::ComplexSum;
use crate::{c64, C64, PI, TAU};

const ORDER: usize = 16;

/// Composite Gauss-Legendre rule on `[a, b]` whose panels span at most half a
/// local period, reused for many Fourier frequencies at once.
#[derive(Debug, Clone)]
pub(crate) struct SpectralGrid {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl SpectralGrid {
    /// `rate(x)` bounds the angular rate of the full integrand and is
    /// non-increasing in `x`.
    pub fn new<R: Fn(f64) -> f64>(a: f64, b: f64, rate: R, max_panels: usize) -> Result<Self> {
        let gl = GaussLegendre::new(ORDER);
        let mut nodes = Vec::new();
        let mut weights = Vec::new();
        let mut x = a;
        let mut panels = 0usize;
        while x < b {
            let w = (PI / rate(x).max(1e-300)).min(b - x).min(1.0);
            for (xi, wi) in gl.mapped(x, x + w) {
                nodes.push(xi);
                weights.push(wi);
            }
            x += w;
            panels += 1;
            if panels > max_panels {
                return Err(Error::Convergence { evaluations: nodes.len(), estimate: f64::INFINITY, target: 0.0 });
            }
        }
        Ok(Self { nodes, weights })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    /// Samples of `f` at the nodes.
    pub fn sample<F: FnMut(f64) -> Result<C64>>(&self, mut f: F) -> Result<Vec<C64>> {
        self.nodes.iter().map(|&x| f(x)).collect()
    }

    /// `int f(x) e^{-2 pi i n x} dx` for every `n` in `n0..=n1`.
    pub fn transform(&self, values: &[C64], n0: i64, n1: i64) -> Vec<C64> {
        let mut phase: Vec<C64> = self.nodes.iter().map(|&x| cis(-TAU * n0 as f64 * x)).collect();
        let step: Vec<C64> = self.nodes.iter().map(|&x| cis(-TAU * x)).collect();
        let mut out = Vec::with_capacity((n1 - n0 + 1).max(0) as usize);
        for n in n0..=n1 {
            // re-anchor the recurrence now and then so rounding does not build up
            if (n - n0) % 64 == 0 && n != n0 {
                for (p, &x) in phase.iter_mut().zip(&self.nodes) {
                    *p = cis(-TAU * n as f64 * x);
                }
            }
            let mut acc = ComplexSum::new();
            for ((v, w), p) in values.iter().zip(&self.weights).zip(&phase) {
                acc.add(v * p * *w);
            }
            out.push(acc.value());
            for (p, s) in phase.iter_mut().zip(&step) {
                *p *= s;
            }
        }
        out
    }
}

fn cis(theta: f64) -> C64 {
    let (s, c) = theta.sin_cos();
    c64(c, s)
}
