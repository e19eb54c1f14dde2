mod common;

use common::c;
use proptest::prelude::*;
use zeta_core::afe::*;
use zeta_core::{EvalConfig, C64, EULER_GAMMA};

const TAU: f64 = std::f64::consts::TAU;

fn cfg() -> EvalConfig {
    EvalConfig::default()
}

fn geometric(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|j| lo * (hi / lo).powf(j as f64 / (n - 1) as f64)).collect()
}

fn calibrate<F: Fn(f64) -> f64>(grid: &[f64], f: F) -> f64 {
    grid.iter().map(|&t| f(t)).fold(0.0, f64::max)
}

#[test]
fn kernel_length_floors() {
    assert_eq!(kernel_length(TAU * 9.0), 3);
    assert_eq!(kernel_length(TAU * 9.0 - 1e-9), 2);
    assert_eq!(kernel_length(100.0), 3);
}

#[test]
fn afe_zeta_scaled_residual_stays_calibrated() {
    let cal = calibrate(&geometric(10.0, 100.0, 10), |t| afe_zeta_residual(c(0.5, t), &cfg()).unwrap().scaled);
    let r = afe_zeta_residual(c(0.5, 1000.0), &cfg()).unwrap();
    assert!(r.scaled <= cal, "{} {}", r.scaled, cal);
    assert!(r.residual >= 0.0);
}

#[test]
fn afe_zeta_residual_decays() {
    let a = afe_zeta_residual(c(0.7, 50.0), &cfg()).unwrap();
    let b = afe_zeta_residual(c(0.7, 500.0), &cfg()).unwrap();
    assert!(b.residual <= a.residual);
}

#[test]
fn afe_zeta_continuous_across_kernel_boundaries() {
    for k in [3.0f64, 4.0, 5.0, 6.0] {
        let t = TAU * k * k;
        let below = afe_zeta_residual(c(0.5, t - 1e-9), &cfg()).unwrap();
        let above = afe_zeta_residual(c(0.5, t + 1e-9), &cfg()).unwrap();
        assert_eq!(kernel_length(t - 1e-9) + 1, kernel_length(t + 1e-9));
        // the term that enters has size ~ 2 N^{-1/2}; the residual must not jump by more
        let jump = (below.residual - above.residual).abs();
        assert!(jump <= 2.0 / k.sqrt() * 0.1 + 1e-8, "{k}: {jump}");
    }
}

#[test]
fn afe_domain_checks() {
    assert!(afe_zeta_residual(c(1.2, 50.0), &cfg()).is_err());
    assert!(afe_zeta_residual(c(0.5, 5.0), &cfg()).is_err());
    assert!(afe_hurwitz_residual(c(0.5, 50.0), 1.5, &cfg()).is_err());
}

#[test]
fn afe_hurwitz_scaled_residual_stays_calibrated() {
    let cal = calibrate(&geometric(10.0, 100.0, 10), |t| afe_hurwitz_residual(c(0.5, t), 0.5, &cfg()).unwrap().scaled);
    let r = afe_hurwitz_residual(c(0.5, 500.0), 0.5, &cfg()).unwrap();
    assert!(r.scaled <= cal);
}

#[test]
fn afe_hurwitz_reduces_to_riemann_at_zero_shift() {
    let s = c(0.5, 300.0);
    let a = afe_hurwitz_residual(s, 0.0, &cfg()).unwrap();
    let b = afe_zeta_residual(s, &cfg()).unwrap();
    assert!((a.residual - b.residual).abs() < 1e-12);
    let near = afe_hurwitz_residual(s, 1e-9, &cfg()).unwrap();
    assert!((near.residual - a.residual).abs() < 1e-6);
}

#[test]
fn afe_hurwitz_uniform_in_shift() {
    let s = c(0.5, 500.0);
    let mid = afe_hurwitz_residual(s, 0.5, &cfg()).unwrap().scaled;
    let worst = [0.0, 0.1, 0.25, 0.4, 0.6, 0.75, 0.9]
        .iter()
        .map(|&a| afe_hurwitz_residual(s, a, &cfg()).unwrap().scaled)
        .fold(0.0, f64::max);
    assert!(worst <= 3.0 * mid, "{worst} {mid}");
}

#[test]
fn projection_identity_examples() {
    let r = projection_identity_check(c(0.0, 0.0), 7, false, &cfg()).unwrap();
    assert!((r.lhs - 7.0).norm() < 1e-14 && (r.rhs - 7.0).norm() < 1e-12);
    let z = c(-0.5, 3.0);
    let r = projection_identity_check(z, 50, false, &cfg()).unwrap();
    assert!(r.abs_residual <= 1e-10);
    let m = projection_identity_check(z, 50, true, &cfg()).unwrap();
    assert_eq!(m.identity_id, "projection_mirrored");
    assert!(m.abs_residual <= 1e-10);
    assert!((m.lhs - r.lhs).norm() == 0.0);
}

#[test]
fn kernel_orthogonality() {
    for n in [1u64, 5, 12] {
        for m in -3i64..=(n as i64 + 3) {
            let v = kernel_coefficient(n, m, &cfg()).unwrap();
            let expected = if m >= 1 && m <= n as i64 { 1.0 } else { 0.0 };
            assert!((v - expected).norm() < 1e-12, "N={n} m={m} {v}");
        }
    }
}

#[test]
fn kernel_norm_growth_rates() {
    let ns = [10u64, 100, 1000, 10_000];
    let mut l1 = Vec::new();
    let mut l15 = Vec::new();
    for &n in &ns {
        let two = kernel_norm_power(n, 2.0, &cfg()).unwrap();
        assert!((two - n as f64).abs() < 1e-9 * n as f64);
        l1.push(kernel_norm_power(n, 1.0, &cfg()).unwrap() / (n as f64).ln());
        // ||B_N||_p^p ~ N^{p-1} for p > 1
        l15.push(kernel_norm_power(n, 1.5, &cfg()).unwrap() / (n as f64).powf(0.5));
    }
    for w in [l1, l15] {
        let hi = w.iter().cloned().fold(0.0, f64::max);
        let lo = w.iter().cloned().fold(f64::INFINITY, f64::min);
        assert!(hi / lo < 2.0, "{w:?}");
    }
}

#[test]
fn weak_afe_scaled_residual_stays_calibrated() {
    let cal = calibrate(&geometric(20.0, 100.0, 6), |t| weak_afe_residual(c(0.5, t), &cfg()).unwrap().scaled);
    let r = weak_afe_residual(c(0.5, 200.0), &cfg()).unwrap();
    assert!(r.scaled <= cal);
}

#[test]
fn weak_afe_residual_does_not_explode() {
    let ts = [50.0, 100.0, 200.0, 400.0];
    let ys: Vec<f64> = ts.iter().map(|&t| weak_afe_residual(c(0.6, t), &cfg()).unwrap().scaled).collect();
    assert!(loglog_slope(&ts, &ys) <= 0.1, "{ys:?}");
}

#[test]
fn weak_afe_terms_are_consistent() {
    let s = c(0.5, 150.0);
    let w = weak_afe_terms(s, &cfg()).unwrap();
    assert!((w.chi.norm() - 1.0).abs() < 1e-10);
    let four = weak_afe_four_integral_residual(s, &cfg()).unwrap();
    let two = weak_afe_residual(s, &cfg()).unwrap();
    assert!(four.exact == two.exact);
    assert!(four.residual.is_finite() && two.residual.is_finite());
}

#[test]
fn lemma3_scaled_residual_bounded() {
    let cal = calibrate(&geometric(20.0, 100.0, 6), |t| lemma3_integral(c(0.5, t), &cfg()).unwrap().1.metric("scaled").unwrap());
    let (_, r) = lemma3_integral(c(0.5, 100.0), &cfg()).unwrap();
    assert!(r.metric("scaled").unwrap() <= cal);
    assert!(r.metric("boundary").unwrap() > 0.0);
}

#[test]
fn first_power_mean_near_log() {
    let i1 = power_mean_ik(1, 100.0, &cfg()).unwrap();
    let expected = (100.0 / TAU).ln() + EULER_GAMMA;
    assert!((i1.value - expected).abs() <= 0.05);
    assert!(i1.error >= 0.0 && i1.value >= 0.0);
}

#[test]
fn riemann_mean_square_near_classical_asymptotic() {
    // (1/T) int_0^T |zeta(1/2+it)|^2 dt = log(T / 2 pi) + 2 gamma - 1 + O(T^{-1/2} log T)
    let j = power_mean_jk(1, 100.0, &cfg()).unwrap();
    let expected = (100.0 / TAU).ln() + 2.0 * EULER_GAMMA - 1.0;
    assert!((j.value - expected).abs() <= 0.05 * expected, "{} {}", j.value, expected);
}

#[test]
fn power_means_real_and_conjugation_symmetric() {
    for t in [30.0, 75.0] {
        let a = power_mean_ik(2, t, &cfg()).unwrap();
        let b = power_mean_ik(2, -t, &cfg()).unwrap();
        assert!(a.value > 0.0);
        assert!((a.value - b.value).abs() <= 1e-10 * a.value);
    }
    let j = power_mean_jk(2, 30.0, &cfg()).unwrap();
    assert!(j.value > 0.0);
}

#[test]
fn s1_sum_at_zero_shift() {
    let t = TAU * 10.5;
    let s = c(0.5, t);
    let direct: C64 = (1..=10).map(|n| c(n as f64, 0.0).powc(s - 1.0)).sum();
    assert!((s1_sum(0.5, t, 0.0) - direct).norm() < 1e-13);
}

#[test]
fn theorem1_ratios() {
    let r1 = theorem1_check(1, &[50.0, 100.0, 200.0, 400.0], &cfg()).unwrap();
    let max1 = r1.iter().map(|r| r.ratio).fold(0.0, f64::max);
    assert!(max1.is_finite() && max1 > 0.0);
    let r2 = theorem1_check(2, &[100.0], &cfg()).unwrap();
    assert!(r2[0].ratio <= 2.0 * max1);
    // doubling the quadrature precision leaves the ratio unchanged
    let tight = EvalConfig::default().with_tolerances(1e-16, 1e-14);
    let r2t = theorem1_check(2, &[100.0], &tight).unwrap();
    assert!((r2t[0].ratio - r2[0].ratio).abs() <= 1e-6 * r2[0].ratio);
}

#[test]
fn loglog_slope_of_power_law() {
    let xs = [1.0, 2.0, 4.0, 8.0];
    let ys: Vec<f64> = xs.iter().map(|x: &f64| 3.0 * x.powf(0.7)).collect();
    assert!((loglog_slope(&xs, &ys) - 0.7).abs() < 1e-12);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn projection_identity_is_exact(x in -2.0f64..1.0, y in -10.0f64..10.0, n in 1u64..=100, mirrored: bool) {
        let r = projection_identity_check(c(x, y), n, mirrored, &cfg()).unwrap();
        prop_assert!(r.abs_residual <= 1e-10 * (1.0 + r.lhs.norm()));
    }

    #[test]
    fn kernel_l2_norm_is_length(n in 1u64..400) {
        let v = kernel_norm_power(n, 2.0, &cfg()).unwrap();
        prop_assert!((v - n as f64).abs() < 1e-10 * n as f64);
    }
}
