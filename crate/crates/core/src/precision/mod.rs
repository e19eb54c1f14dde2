//! Double-double arithmetic (about 106 significand bits) and oracle-tier
//! versions of `zeta1` and `ln Gamma`, used to cross-check the `f64` kernels.

mod complex;
mod dd;
mod functions;

pub use complex::DdComplex;
pub use dd::Dd;
pub use functions::{ln_gamma_dd, zeta1_dd};
