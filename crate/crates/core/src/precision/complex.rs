use core::ops::{Add, Div, Mul, Neg, Sub};

use super::Dd;
use crate::C64;

/// Complex number with double-double parts.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DdComplex {
    pub re: Dd,
    pub im: Dd,
}

impl DdComplex {
    pub const ZERO: DdComplex = DdComplex { re: Dd::ZERO, im: Dd::ZERO };
    pub const ONE: DdComplex = DdComplex { re: Dd::ONE, im: Dd::ZERO };

    pub fn new(re: Dd, im: Dd) -> Self {
        Self { re, im }
    }

    pub fn from_real(re: Dd) -> Self {
        Self { re, im: Dd::ZERO }
    }

    pub fn to_c64(self) -> C64 {
        C64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn norm_sqr(self) -> Dd {
        self.re.sqr() + self.im.sqr()
    }

    pub fn norm(self) -> Dd {
        self.norm_sqr().sqrt()
    }

    pub fn scale(self, k: Dd) -> Self {
        Self { re: self.re * k, im: self.im * k }
    }

    pub fn exp(self) -> Self {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        Self { re: m * c, im: m * s }
    }

    /// Principal logarithm.
    pub fn ln(self) -> Self {
        Self { re: self.norm_sqr().ln().ldexp(-1), im: Dd::atan2(self.im, self.re) }
    }

    /// `x^s` for real positive `x`.
    pub fn rpow(x: Dd, s: DdComplex) -> Self {
        (s.scale(x.ln())).exp()
    }
}

impl From<C64> for DdComplex {
    fn from(z: C64) -> Self {
        Self { re: Dd::new(z.re), im: Dd::new(z.im) }
    }
}

impl Add for DdComplex {
    type Output = DdComplex;
    fn add(self, b: DdComplex) -> DdComplex {
        DdComplex { re: self.re + b.re, im: self.im + b.im }
    }
}

impl Sub for DdComplex {
    type Output = DdComplex;
    fn sub(self, b: DdComplex) -> DdComplex {
        DdComplex { re: self.re - b.re, im: self.im - b.im }
    }
}

impl Neg for DdComplex {
    type Output = DdComplex;
    fn neg(self) -> DdComplex {
        DdComplex { re: -self.re, im: -self.im }
    }
}

impl Mul for DdComplex {
    type Output = DdComplex;
    fn mul(self, b: DdComplex) -> DdComplex {
        DdComplex { re: self.re * b.re - self.im * b.im, im: self.re * b.im + self.im * b.re }
    }
}

impl Div for DdComplex {
    type Output = DdComplex;
    fn div(self, b: DdComplex) -> DdComplex {
        let d = b.norm_sqr();
        DdComplex { re: (self.re * b.re + self.im * b.im) / d, im: (self.im * b.re - self.re * b.im) / d }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_of_log() {
        let z = DdComplex::from(C64::new(-1.3, 2.7));
        let w = z.ln().exp();
        assert!((w - z).norm().to_f64() < 1e-30);
    }

    #[test]
    fn rpow_matches_f64() {
        let s = C64::new(0.5, 14.0);
        let v = DdComplex::rpow(Dd::new(3.0), DdComplex::from(s)).to_c64();
        let w = (s * 3f64.ln()).exp();
        assert!((v - w).norm() < 1e-14);
    }
}
