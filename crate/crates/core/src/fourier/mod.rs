//! Fourier series of `zeta1(s, .)` and of products `zeta1(u, .) zeta1(v, .)`:
//! the coefficients `a_n` and `q_n`, the Rane representation, tail bounds,
//! Parseval checks and the fourth-moment harness.

use alloc::vec::Vec;

use crate::C64;

mod grid;
mod parseval;
mod qn;
mod rane;
mod theorem2;

pub use parseval::{
    fourier_reconstruct, fourth_moment_cutoff, fourth_moment_tail, highfreq_kernel_check, highfreq_tail_check,
    parseval_fourth_moment, parseval_second_moment, product_jump_tail, second_moment_cutoff, Reconstruction,
};
pub use qn::{
    a_coefficients, q_coefficients, qn_continued, qn_continued_truncated, qn_convolution, qn_direct,
    qn_fourier_quadrature, qn_truncated, truncated_product_integral, truncated_product_transforms,
};
pub use rane::{
    rane_oscillatory_sum, rane_partial_sum, rane_representation, rane_tail_correction, tail_lemma_check,
    tail_lemma_estimate,
};
pub use theorem2::{theorem2_check, theorem2_sum, Theorem2Record};

/// Which representation produced a coefficient set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FourierMode {
    /// Absolutely convergent integrals, `Re u, Re v > 1`.
    Direct,
    /// Regularised integrals, valid for `Re u, Re v > 0`.
    Continued,
}

/// Coefficients `a_n(u)` (`v` is `None`) or `q_n(u, v)` for consecutive `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierCoeffSet {
    pub u: C64,
    pub v: Option<C64>,
    pub n_min: i64,
    pub coeffs: Vec<C64>,
    pub mode: FourierMode,
    pub evaluations: usize,
}

impl FourierCoeffSet {
    pub fn n_max(&self) -> i64 {
        self.n_min + self.coeffs.len() as i64 - 1
    }

    pub fn get(&self, n: i64) -> Option<C64> {
        if n < self.n_min {
            return None;
        }
        self.coeffs.get((n - self.n_min) as usize).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, C64)> + '_ {
        self.coeffs.iter().enumerate().map(move |(j, c)| (self.n_min + j as i64, *c))
    }
}

/// Measured constant of a tail bound at offset `eta` past `t/2pi`.
#[derive(Debug, Clone, PartialEq)]
pub struct TailEstimate {
    pub eta: f64,
    pub bound_constant: f64,
    pub derivative_constant: f64,
    pub claimed_order: &'static str,
    /// `(alpha, ratio)` pairs behind `bound_constant`.
    pub samples: Vec<(f64, f64)>,
}
