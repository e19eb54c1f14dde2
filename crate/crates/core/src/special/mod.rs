//! Special functions: Gamma, Riemann and Hurwitz zeta, the functional-equation
//! factor, the Dirichlet kernel, Bernoulli numbers and Fourier coefficients of
//! `a -> a^(-s)` on `[1, oo)`.

mod bernoulli;
mod beta;
mod chi;
mod cmath;
mod fourier_coeff;
mod gamma;
mod kernel;
mod zeta;

pub(crate) use zeta::em_bound;

pub use bernoulli::{bernoulli_2k, bernoulli_numbers, bernoulli_rational, BERNOULLI_2K};
pub use beta::beta_integral;
pub use chi::{chi, ln_chi};
pub use cmath::{ln_cos, ln_sin, pochhammer, rpow};
pub use fourier_coeff::{exp_integral_tail, fourier_coeff_a, fourier_coeff_a_asymptotic};
pub use gamma::{gamma, gamma_with_error, ln_gamma};
pub use kernel::dirichlet_kernel;
pub use zeta::{
    hurwitz_zeta, hurwitz_zeta1, hurwitz_zeta1_remainder, hurwitz_zeta1_with_error, hurwitz_zeta_shifted,
    riemann_zeta, riemann_zeta_with_error, zeta1_increment, ZetaEval,
};
