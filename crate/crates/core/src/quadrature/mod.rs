//! Adaptive quadrature on finite intervals, semi-infinite ranges, oscillatory
//! integrands, vertical lines in the complex plane and steepest-descent rays.

mod contour;
mod gk;
mod legendre;
mod oscillatory;
mod ray;
mod semi_infinite;

pub use contour::{integrate_vertical_line, truncation_height, try_integrate_vertical_line, ContourSpec};
pub use gk::{integrate_finite, integrate_with_breaks, try_integrate_finite, try_integrate_with_breaks};
pub use legendre::GaussLegendre;
pub use oscillatory::{integrate_oscillatory, oscillatory_breaks, try_integrate_oscillatory, OscSpec};
pub use ray::try_integrate_ray;
pub use semi_infinite::{integrate_semi_infinite, try_integrate_semi_infinite};

use crate::C64;

/// Value of an integral with its absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: C64,
    pub error: f64,
    pub evaluations: usize,
}

impl QuadResult {
    pub const ZERO: QuadResult = QuadResult { value: C64::new(0.0, 0.0), error: 0.0, evaluations: 0 };

    pub fn combine(self, other: QuadResult) -> QuadResult {
        QuadResult {
            value: self.value + other.value,
            error: self.error + other.error,
            evaluations: self.evaluations + other.evaluations,
        }
    }

    pub fn scale(self, k: C64) -> QuadResult {
        QuadResult { value: self.value * k, error: self.error * k.norm(), evaluations: self.evaluations }
    }
}

pub(crate) fn infallible<F: FnMut(f64) -> C64>(mut f: F) -> impl FnMut(f64) -> crate::Result<C64> {
    move |x| Ok(f(x))
}
