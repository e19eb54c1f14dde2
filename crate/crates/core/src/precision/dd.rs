use core::cmp::Ordering;
use core::ops::{Add, Div, Mul, Neg, Sub};

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi) / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, libm::fma(a, b, -p))
}

const LN2: Dd = Dd { hi: core::f64::consts::LN_2, lo: 2.319046813846299558e-17 };
const PI: Dd = Dd { hi: core::f64::consts::PI, lo: 1.2246467991473532e-16 };

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub const fn new(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn pi() -> Self {
        PI
    }

    pub fn ln2() -> Self {
        LN2
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    pub fn is_finite(self) -> bool {
        self.hi.is_finite()
    }

    pub fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p, e + self.lo * b);
        Dd { hi, lo }
    }

    pub fn sqr(self) -> Self {
        self * self
    }

    pub fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return Dd::ZERO;
        }
        let x = self.hi.sqrt();
        // one Newton step in double-double
        let xd = Dd::new(x);
        let r = self - xd.sqr();
        xd + Dd::new(r.hi / (2.0 * x))
    }

    pub fn powi(self, mut n: i32) -> Self {
        if n < 0 {
            return Dd::ONE / self.powi(-n);
        }
        let mut base = self;
        let mut acc = Dd::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base;
            }
            base = base.sqr();
            n >>= 1;
        }
        acc
    }

    pub fn ldexp(self, k: i32) -> Self {
        Dd { hi: libm::ldexp(self.hi, k), lo: libm::ldexp(self.lo, k) }
    }

    pub fn exp(self) -> Self {
        if self.hi > 709.0 {
            return Dd::new(f64::INFINITY);
        }
        if self.hi < -745.0 {
            return Dd::ZERO;
        }
        let k = (self.hi / LN2.hi).round();
        let r = (self - LN2.mul_f64(k)).ldexp(-10);
        // Taylor series on |r| < 3.4e-4
        // work with exp(r) - 1 so the squarings keep full relative accuracy
        let mut term = r;
        let mut m = r;
        for j in 2..=14 {
            term = term * r / Dd::new(j as f64);
            m = m + term;
            if term.hi.abs() < 1e-36 {
                break;
            }
        }
        for _ in 0..10 {
            m = m * (m + Dd::new(2.0));
        }
        (m + Dd::ONE).ldexp(k as i32)
    }

    pub fn ln(self) -> Self {
        if self.hi <= 0.0 {
            return Dd::new(f64::NAN);
        }
        // Newton on exp(y) = x, doubling the digits of the f64 start
        let mut y = Dd::new(self.hi.ln());
        for _ in 0..2 {
            y = y + self * (-y).exp() - Dd::ONE;
        }
        y
    }

    /// `(sin x, cos x)` after reduction by multiples of `pi/2`.
    pub fn sin_cos(self) -> (Self, Self) {
        let half_pi = PI.ldexp(-1);
        let q = (self.hi / half_pi.hi).round();
        // two-step reduction keeps the remainder accurate for |x| up to ~1e6
        let r = self - half_pi * Dd::new(q);
        let r2 = r.sqr();
        let mut s = r;
        let mut c = Dd::ONE;
        let mut ts = r;
        let mut tc = Dd::ONE;
        for k in 1..=16 {
            let kf = (2 * k) as f64;
            ts = -(ts * r2) / Dd::new(kf * (kf + 1.0));
            tc = -(tc * r2) / Dd::new((kf - 1.0) * kf);
            s = s + ts;
            c = c + tc;
            if ts.hi.abs() < 1e-34 && tc.hi.abs() < 1e-34 {
                break;
            }
        }
        match (q as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    pub fn atan2(y: Self, x: Self) -> Self {
        let mut th = Dd::new(y.hi.atan2(x.hi));
        for _ in 0..2 {
            let (s, c) = th.sin_cos();
            let num = y * c - x * s;
            let den = x * c + y * s;
            th = th + num / den;
        }
        th
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Self {
        Dd::new(x)
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, b: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + Dd::new(q3)
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, other: &Dd) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            o => o,
        }
    }
}
