use crate::{c64, C64};

/// `x^s` for real `x > 0`.
#[inline]
pub fn rpow(x: f64, s: C64) -> C64 {
    let l = x.ln();
    let m = (s.re * l).exp();
    let (sn, cs) = (s.im * l).sin_cos();
    c64(m * cs, m * sn)
}

/// Rising factorial `(s)_k = s (s+1) ... (s+k-1)`.
pub fn pochhammer(s: C64, k: usize) -> C64 {
    let mut p = c64(1.0, 0.0);
    for j in 0..k {
        p *= s + j as f64;
    }
    p
}

/// `ln sin z`, stable for large `|Im z|`.
pub fn ln_sin(z: C64) -> C64 {
    if z.im > 20.0 {
        // sin z = (i/2) e^{-iz} (1 - e^{2iz})
        let e = (c64(0.0, 2.0) * z).exp();
        c64(0.0, -1.0) * z + c64(0.5f64.ln(), core::f64::consts::FRAC_PI_2) + (c64(1.0, 0.0) - e).ln()
    } else if z.im < -20.0 {
        // sin z = (-i/2) e^{iz} (1 - e^{-2iz})
        let e = (c64(0.0, -2.0) * z).exp();
        c64(0.0, 1.0) * z + c64(0.5f64.ln(), -core::f64::consts::FRAC_PI_2) + (c64(1.0, 0.0) - e).ln()
    } else {
        z.sin().ln()
    }
}

/// `ln cos z`, stable for large `|Im z|`.
pub fn ln_cos(z: C64) -> C64 {
    if z.im > 20.0 {
        // cos z = (1/2) e^{-iz} (1 + e^{2iz})
        let e = (c64(0.0, 2.0) * z).exp();
        c64(0.0, -1.0) * z + c64(0.5f64.ln(), 0.0) + (c64(1.0, 0.0) + e).ln()
    } else if z.im < -20.0 {
        let e = (c64(0.0, -2.0) * z).exp();
        c64(0.0, 1.0) * z + c64(0.5f64.ln(), 0.0) + (c64(1.0, 0.0) + e).ln()
    } else {
        z.cos().ln()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln_sin_branches_agree_near_switch() {
        for &y in &[19.9, 20.1, -19.9, -20.1] {
            let z = c64(0.3, y);
            let direct = z.sin().ln();
            let stable = ln_sin(z);
            let d = (direct - stable).exp();
            assert!((d - 1.0).norm() < 1e-13, "{y}: {direct} vs {stable}");
        }
    }

    #[test]
    fn ln_cos_large_imaginary() {
        let z = c64(0.7, 400.0);
        let v = ln_cos(z);
        assert!((v.re - (400.0 - 2f64.ln())).abs() < 1e-12);
    }

    #[test]
    fn rpow_matches_powc() {
        let s = c64(-0.7, 13.0);
        let a = rpow(3.5, s);
        let b = c64(3.5, 0.0).powc(s);
        assert!((a - b).norm() < 1e-14 * b.norm());
    }
}
