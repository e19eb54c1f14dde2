mod common;

use common::{c, rel};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zeta_core::precision::{ln_gamma_dd, zeta1_dd, Dd, DdComplex};
use zeta_core::special::{gamma_with_error, hurwitz_zeta1_with_error};
use zeta_core::EvalConfig;

#[test]
fn zeta1_standard_precision_within_its_reported_error() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let cfg = EvalConfig::default();
    for _ in 0..100 {
        let s = c(rng.gen_range(0.05..3.0), rng.gen_range(-60.0..60.0));
        let a = rng.gen_range(0.0..2.0);
        let e = hurwitz_zeta1_with_error(s, a, &cfg).unwrap();
        let dd = zeta1_dd(s, a).unwrap().to_c64();
        assert!((e.value - dd).norm() <= e.error, "s={s} a={a}: {:e} > {:e}", (e.value - dd).norm(), e.error);
    }
}

#[test]
fn gamma_standard_precision_within_its_reported_error() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x9a33a);
    for _ in 0..100 {
        let z = c(rng.gen_range(0.05..12.0), rng.gen_range(-40.0..40.0));
        let (g, err) = gamma_with_error(z).unwrap();
        let dd = ln_gamma_dd(z).unwrap().exp().to_c64();
        assert!((g - dd).norm() <= err, "z={z}");
    }
}

#[test]
fn double_double_constants() {
    let pi = Dd::pi();
    assert_eq!(pi.to_f64(), std::f64::consts::PI);
    // sin(pi) in double-double is the tail of pi, about 1.2e-16 before rounding
    let (s, co) = pi.sin_cos();
    assert!(s.abs().to_f64() < 1e-30);
    assert!((co.to_f64() + 1.0).abs() < 1e-30);
    let two = Dd::new(2.0);
    assert!(((two.sqrt().sqr()) - two).abs().to_f64() < 1e-31);
    assert!((Dd::ln2().exp() - two).abs().to_f64() < 1e-30);
}

#[test]
fn zeta1_dd_closed_forms() {
    let pi = Dd::pi();
    let z2 = zeta1_dd(c(2.0, 0.0), 0.0).unwrap();
    let exact = pi.sqr() / Dd::new(6.0);
    assert!((z2.re - exact).abs().to_f64() < 1e-30);
    assert!(zeta1_dd(c(2.0, 0.0), -0.5).is_err());
}

#[test]
fn complex_dd_roundtrip() {
    let z = DdComplex::from(c(0.3, -1.7));
    let w = z.ln().exp();
    assert!(rel(w.to_c64(), c(0.3, -1.7)) < 1e-15);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dd_arithmetic_is_exact_to_double_double(a in -1e6f64..1e6, b in 1e-3f64..1e3) {
        let x = Dd::new(a);
        let y = Dd::new(b);
        let q = x / y;
        prop_assert!(((q * y) - x).abs().to_f64() <= 1e-30 * a.abs().max(1.0));
        let e = (x.mul_f64(1e-6)).exp();
        prop_assert!((e.ln() - x.mul_f64(1e-6)).abs().to_f64() <= 1e-29 * (1.0 + a.abs() * 1e-6));
    }

    #[test]
    fn dd_trig_identity(a in -100.0f64..100.0) {
        let (s, co) = Dd::new(a).sin_cos();
        prop_assert!((s.sqr() + co.sqr() - Dd::new(1.0)).abs().to_f64() < 1e-30);
    }
}
