//! Numerical kernels for the Riemann zeta function and the modified Hurwitz
//! zeta function `zeta1(s, a) = sum_{n >= 1} (n + a)^(-s)`, together with the
//! quadrature engines and identity verifiers built on top of them.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod afe;
pub mod config;
pub mod error;
pub mod fourier;
pub mod identities;
pub mod precision;
pub mod quadrature;
pub mod report;
pub mod special;
pub mod sum;

pub use config::EvalConfig;
pub use error::{Error, Result};
pub use report::{Cost, IdentityReport, ParamValue, Params};

/// Complex double used throughout the crate.
pub type C64 = num_complex::Complex64;

pub(crate) const PI: f64 = core::f64::consts::PI;
pub(crate) const TAU: f64 = core::f64::consts::TAU;

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

#[inline]
pub(crate) fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}
