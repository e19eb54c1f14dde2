//! Oracles shared by the integration tests. They avoid the crate's own
//! quadrature and series code so that agreement is meaningful.

#![allow(dead_code)]

use zeta_core::C64;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn rel(a: C64, b: C64) -> f64 {
    let scale = a.norm().max(b.norm());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).norm() / scale
    }
}

const GL8_X: [f64; 4] = [0.183_434_642_495_649_8, 0.525_532_409_916_329, 0.796_666_477_413_626_7, 0.960_289_856_497_536_3];
const GL8_W: [f64; 4] = [0.362_683_783_378_362, 0.313_706_645_877_887_3, 0.222_381_034_453_374_5, 0.101_228_536_290_376_3];

/// Composite 8-point Gauss-Legendre on `panels` equal panels.
pub fn gl_composite<F: FnMut(f64) -> C64>(mut f: F, a: f64, b: f64, panels: usize) -> C64 {
    let h = (b - a) / panels as f64;
    let mut acc = c(0.0, 0.0);
    let mut comp = c(0.0, 0.0);
    for p in 0..panels {
        let mid = a + (p as f64 + 0.5) * h;
        let mut panel = c(0.0, 0.0);
        for (x, w) in GL8_X.iter().zip(GL8_W) {
            panel += (f(mid + 0.5 * h * x) + f(mid - 0.5 * h * x)) * w;
        }
        // Kahan on the panel sums
        let y = panel * (0.5 * h) - comp;
        let t = acc + y;
        comp = (t - acc) - y;
        acc = t;
    }
    acc
}

/// `B_{2k}` from `B_{2k} = (-1)^{k+1} 2 (2k)! zeta(2k) / (2 pi)^{2k}`, with `zeta(2k)` summed directly.
pub fn bernoulli_2k_oracle(k: usize) -> f64 {
    if k == 1 {
        return 1.0 / 6.0;
    }
    let p = 2 * k as i32;
    let n = 2000;
    let mut z = 0.0;
    for j in (1..=n).rev() {
        z += (j as f64).powi(-p);
    }
    z += (n as f64 + 0.5).powi(1 - p) / (p - 1) as f64;
    let mut f = 1.0;
    for j in 1..=2 * k {
        f *= j as f64 / (2.0 * std::f64::consts::PI);
    }
    let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
    sign * 2.0 * f * z
}

/// `ln Gamma(z)` from Stirling's series with `terms` corrections after shifting `|z|` above 20.
pub fn ln_gamma_stirling(mut z: C64, terms: usize) -> C64 {
    let mut shift = c(0.0, 0.0);
    while z.norm() < 20.0 {
        shift += z.ln();
        z += 1.0;
    }
    let mut s = (z - 0.5) * z.ln() - z + 0.5 * (2.0 * std::f64::consts::PI).ln();
    let z2 = z * z;
    let mut zp = z;
    for k in 1..=terms {
        let kk = 2 * k;
        s += bernoulli_2k_oracle(k) / ((kk * (kk - 1)) as f64 * zp);
        zp *= z2;
    }
    s - shift
}

/// `zeta(s)` from the alternating series through Borwein's acceleration, `Re s > 0`.
pub fn zeta_eta(s: C64) -> C64 {
    let n = 120usize;
    // d_k = n sum_{i=0}^{k} (n+i-1)! 4^i / ((n-i)! (2i)!)
    let mut d = vec![0.0f64; n + 1];
    let mut term = 1.0 / n as f64;
    let mut acc = 0.0;
    for i in 0..=n {
        if i > 0 {
            term *= (n + i - 1) as f64 * 4.0 * (n - i + 1) as f64 / ((2 * i - 1) * (2 * i)) as f64;
        }
        acc += term;
        d[i] = acc * n as f64;
    }
    let mut sum = c(0.0, 0.0);
    for k in 0..n {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += c(k as f64 + 1.0, 0.0).powc(-s) * (sign * (d[k] - d[n]));
    }
    let eta = -sum / d[n];
    eta / (c(1.0, 0.0) - c(2.0, 0.0).powc(c(1.0, 0.0) - s))
}

/// `sum_{n >= 1} (n + a)^(-s)` by brute force to `n_terms` plus a midpoint-integral tail.
pub fn zeta1_brute(s: C64, a: f64, n_terms: usize) -> C64 {
    let mut acc = c(0.0, 0.0);
    for n in (1..=n_terms).rev() {
        acc += c(n as f64 + a, 0.0).powc(-s);
    }
    // sum_{n>N} f(n) ~ int_{N+1/2}^oo f + f'(N+1/2)/24
    let x = n_terms as f64 + 0.5 + a;
    let one = c(1.0, 0.0);
    let tail = c(x, 0.0).powc(one - s) / (s - 1.0) - s * c(x, 0.0).powc(-s - 1.0) / 24.0;
    acc + tail
}
