use crate::{c64, C64, PI};

/// Dirichlet kernel `B_N(a) = sum_{n=1}^{N} e^{2 pi i n a}`.
///
/// Uses the closed form away from integers and a Taylor expansion close to them.
pub fn dirichlet_kernel(n: u64, a: f64) -> C64 {
    if n == 0 {
        return c64(0.0, 0.0);
    }
    let d = a - a.round();
    let nf = n as f64;
    if d == 0.0 {
        return c64(nf, 0.0);
    }
    let phase = c64(0.0, PI * (nf + 1.0) * d).exp();
    let x = PI * d;
    let sx = x.sin();
    if sx.abs() <= 1e-8 {
        let amp = nf * (1.0 - (nf * nf - 1.0) * x * x / 6.0);
        return phase * amp;
    }
    phase * ((nf * x).sin() / sx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sum::csum;

    fn direct(n: u64, a: f64) -> C64 {
        csum((1..=n).map(|k| c64(0.0, 2.0 * PI * k as f64 * a).exp()))
    }

    #[test]
    fn values_at_integers_and_halves() {
        assert_eq!(dirichlet_kernel(5, 0.0), c64(5.0, 0.0));
        assert_eq!(dirichlet_kernel(5, 3.0), c64(5.0, 0.0));
        let h = dirichlet_kernel(4, 0.5);
        assert!(h.norm() < 1e-14);
        let h5 = dirichlet_kernel(5, 0.5);
        assert!((h5 + 1.0).norm() < 1e-14);
    }

    #[test]
    fn matches_direct_sum() {
        for &n in &[1u64, 2, 7, 50, 301] {
            for &a in &[0.013, 0.25, 0.5 - 1e-9, 0.77, 1.0 + 3e-10, -2.4, 1e-12] {
                let k = dirichlet_kernel(n, a);
                let d = direct(n, a);
                assert!((k - d).norm() <= 1e-11 * (n as f64), "{n} {a}: {k} {d}");
            }
        }
    }
}
