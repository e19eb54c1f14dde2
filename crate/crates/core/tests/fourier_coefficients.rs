use zeta_core::quadrature::integrate_with_breaks;
use zeta_core::special::{fourier_coeff_a, fourier_coeff_a_asymptotic, gamma};
use zeta_core::{EvalConfig, C64};

const TAU: f64 = std::f64::consts::TAU;

// int_0^oo - int_0^1, the first via Gamma, the second via its Taylor series.
fn oracle(n: i64, s: C64) -> C64 {
    let k = C64::new(0.0, TAU * n as f64);
    let one = C64::new(1.0, 0.0);
    let full = gamma(one - s).unwrap() * k.powc(s - 1.0);
    let mut head = C64::new(0.0, 0.0);
    let mut pow = one;
    let mut j = 0usize;
    loop {
        let term = pow / (one * (j as f64 + 1.0) - s);
        head += term;
        if term.norm() < 1e-18 * head.norm() && j > 2 * k.norm() as usize {
            break;
        }
        j += 1;
        pow = pow * (-k) / j as f64;
    }
    full - head
}

// Straight real-axis quadrature on [1, A] plus the integration-by-parts tail at A.
fn direct_oracle(n: i64, s: C64) -> C64 {
    let k = TAU * n as f64;
    let ik = C64::new(0.0, k);
    let a_end = 10.0 * (s.norm() + 20.0) / k.abs() + 2.0;
    let panels = ((a_end - 1.0) * (k.abs() + s.im.abs()) * 2.0).ceil() as usize + 8;
    let breaks: Vec<f64> = (0..=panels).map(|j| 1.0 + (a_end - 1.0) * j as f64 / panels as f64).collect();
    let body = integrate_with_breaks(
        |y| C64::new(y, 0.0).powc(-s) * (-ik * y).exp(),
        &breaks,
        &EvalConfig::default().with_tolerances(1e-16, 1e-13),
    )
    .unwrap()
    .value;
    let mut tail = C64::new(0.0, 0.0);
    let mut poch = C64::new(1.0, 0.0);
    let mut ikp = ik;
    for j in 0..30 {
        let g = poch * C64::new(a_end, 0.0).powc(-s - j as f64) * if j % 2 == 0 { 1.0 } else { -1.0 };
        tail += g / ikp;
        poch *= s + j as f64;
        ikp *= ik;
    }
    body + tail * (-ik * a_end).exp()
}

#[test]
fn matches_direct_real_axis_oracle() {
    let cfg = EvalConfig::default();
    let points = [
        (-3, C64::new(2.5, 50.0)),
        (3, C64::new(2.5, 50.0)),
        (-5, C64::new(1.1, 100.0)),
        (-20, C64::new(0.5, 100.0)),
        (12, C64::new(0.5, -80.0)),
        (-1, C64::new(0.2, 30.0)),
        (4, C64::new(-0.5, 1.0)),
    ];
    for (n, s) in points {
        let a = fourier_coeff_a(n, s, &cfg).unwrap();
        let b = direct_oracle(n, s);
        let err = (a - b).norm() / b.norm();
        assert!(err < 1e-9, "n={n} s={s}: {a} vs {b} ({err:e})");
    }
}

#[test]
fn high_precision_reference() {
    let a = fourier_coeff_a(-3, C64::new(2.5, 50.0), &EvalConfig::default()).unwrap();
    let reference = C64::new(-0.036_736_530_849_489_369_228_5, 0.040_793_949_308_074_652_195_1);
    assert!((a - reference).norm() < 1e-14);
}

#[test]
fn matches_gamma_taylor_oracle() {
    let cfg = EvalConfig::default();
    let points = [
        (1, C64::new(0.5, 0.0)),
        (-1, C64::new(0.5, 3.0)),
        (2, C64::new(0.3, -4.0)),
        (-2, C64::new(1.5, 12.0)),
        (-1, C64::new(1.5, 20.0)),
        (-1, C64::new(0.5, 6.2)),
        (-1, C64::new(0.5, 6.4)),
    ];
    for (n, s) in points {
        let a = fourier_coeff_a(n, s, &cfg).unwrap();
        let b = oracle(n, s);
        let err = (a - b).norm() / b.norm();
        assert!(err < 1e-9, "n={n} s={s}: {a} vs {b} ({err:e})");
    }
}

#[test]
fn conjugation_symmetry() {
    let cfg = EvalConfig::default();
    for (n, s) in [(3, C64::new(0.8, 11.0)), (7, C64::new(2.0, -40.0))] {
        let a = fourier_coeff_a(n, s, &cfg).unwrap();
        let b = fourier_coeff_a(-n, s.conj(), &cfg).unwrap();
        assert!((a - b.conj()).norm() <= 1e-14 * a.norm());
    }
}

#[test]
fn leading_asymptotics() {
    let cfg = EvalConfig::default();
    let s = C64::new(0.5, 10.0);
    for n in [200i64, 1000, -1000] {
        let a = fourier_coeff_a(n, s, &cfg).unwrap();
        let lead = fourier_coeff_a_asymptotic(n, s, 1);
        let full = fourier_coeff_a_asymptotic(n, s, 10);
        assert!(((a - lead) * (n as f64).powi(2)).norm() < 1.0);
        assert!((a - full).norm() < 1e-14);
    }
}
