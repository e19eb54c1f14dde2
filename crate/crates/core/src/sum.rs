//! Compensated summation.

use crate::C64;

/// Neumaier (improved Kahan) summation of real numbers.
#[derive(Debug, Clone, Copy, Default)]
pub struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    pub const fn new() -> Self {
        Self { sum: 0.0, comp: 0.0 }
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Componentwise Neumaier summation of complex numbers.
#[derive(Debug, Clone, Copy, Default)]
pub struct ComplexSum {
    re: Neumaier,
    im: Neumaier,
}

impl ComplexSum {
    pub const fn new() -> Self {
        Self { re: Neumaier::new(), im: Neumaier::new() }
    }

    #[inline]
    pub fn add(&mut self, z: C64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    #[inline]
    pub fn value(&self) -> C64 {
        C64::new(self.re.value(), self.im.value())
    }
}

impl core::iter::FromIterator<C64> for ComplexSum {
    fn from_iter<I: IntoIterator<Item = C64>>(iter: I) -> Self {
        let mut s = ComplexSum::new();
        for z in iter {
            s.add(z);
        }
        s
    }
}

/// Compensated sum of an iterator of complex numbers.
pub fn csum<I: IntoIterator<Item = C64>>(iter: I) -> C64 {
    iter.into_iter().collect::<ComplexSum>().value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_cancelled_terms() {
        let mut s = Neumaier::new();
        for x in [1.0, 1e100, 1.0, -1e100] {
            s.add(x);
        }
        assert_eq!(s.value(), 2.0);
    }

    #[test]
    fn complex_harmonic_partial() {
        let z = csum((1..=1000).map(|n| C64::new(1.0 / n as f64, -1.0 / n as f64)));
        let mut naive = 0.0;
        for n in (1..=1000).rev() {
            naive += 1.0 / n as f64;
        }
        assert!((z.re - naive).abs() < 1e-14);
        assert!((z.im + naive).abs() < 1e-14);
    }
}
