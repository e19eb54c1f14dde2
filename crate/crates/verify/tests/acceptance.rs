//! Acceptance criteria. Each test writes one `criterion N ... PASS|FAIL` line
//! straight to stdout (bypassing libtest capture) and then asserts.

use std::io::Write;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use zeta_core::afe::{afe_zeta_residual, loglog_slope, power_mean_ik, projection_identity_check, theorem1_check, weak_afe_residual};
use zeta_core::fourier::{
    highfreq_tail_check, parseval_fourth_moment, parseval_second_moment, qn_convolution, qn_direct, qn_fourier_quadrature,
    second_moment_cutoff, tail_lemma_estimate, theorem2_check,
};
use zeta_core::identities::{
    admissible_abscissa, i1_asymptotic_check, moment_rhs_terms, verify_katsurada, verify_moment, verify_square_identity, MomentParams,
};
use zeta_core::{EvalConfig, C64};
use zeta_verify::eval::{evaluate, EvalArgs};
use zeta_verify::{registry, run_suite, Overrides, SuiteInfo, SuiteSpec, VerifyError};

const TAU: f64 = std::f64::consts::TAU;

fn cfg() -> EvalConfig {
    EvalConfig::default()
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm())
}

fn verdict(n: u32, name: &str, pass: bool, detail: &str) {
    let line = format!("\ncriterion {n:>2} {name:<34} {}  {detail}\n", if pass { "PASS" } else { "FAIL" });
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(line.as_bytes());
    let _ = out.flush();
    assert!(pass, "criterion {n} ({name}) failed: {detail}");
}

fn max_over_median(xs: &[f64]) -> f64 {
    let mut v = xs.to_vec();
    v.sort_by(f64::total_cmp);
    let m = v.len();
    let median = if m % 2 == 1 { v[m / 2] } else { 0.5 * (v[m / 2 - 1] + v[m / 2]) };
    v[m - 1] / median
}

fn geometric(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|j| if j + 1 == n { hi } else { lo * (hi / lo).powf(j as f64 / (n - 1) as f64) }).collect()
}

fn mpar(us: &[C64]) -> MomentParams {
    MomentParams::new(us).unwrap()
}

#[test]
fn criterion_01_quadratic_moment() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let points: Vec<(C64, C64)> = (0..25)
        .map(|_| (c(rng.gen_range(1.2..4.0), rng.gen_range(-5.0..5.0)), c(rng.gen_range(1.2..4.0), rng.gen_range(-5.0..5.0))))
        .collect();
    let start = Instant::now();
    let mut worst = 0.0f64;
    let mut bad = 0;
    for (u, v) in &points {
        match verify_moment(&mpar(&[*u, *v]), &cfg()) {
            Ok(r) => {
                worst = worst.max(r.rel_residual);
                if !(r.rel_residual <= 1e-7) {
                    bad += 1;
                }
            }
            Err(_) => bad += 1,
        }
    }
    let secs = start.elapsed().as_secs_f64();
    let pass = bad == 0 && secs <= 60.0;
    verdict(1, "quadratic moment", pass, &format!("25 points, max rel {worst:.2e} (<= 1e-7), {secs:.1} s (<= 60 s)"));
}

#[test]
fn criterion_02_triple_and_quadruple_moments() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let sets: Vec<Vec<C64>> = (0..20)
        .map(|j| (0..if j < 10 { 3 } else { 4 }).map(|_| c(rng.gen_range(1.2..3.0), rng.gen_range(-3.0..3.0))).collect())
        .collect();
    let reports: Vec<_> = sets.par_iter().map(|us| verify_moment(&mpar(us), &cfg())).collect();
    let mut worst3 = 0.0f64;
    let mut worst4 = 0.0f64;
    let mut ok = true;
    let mut terms_ok = moment_rhs_terms(4) == 15 && moment_rhs_terms(3) == 7;
    for (us, r) in sets.iter().zip(&reports) {
        match r {
            Ok(r) => {
                if us.len() == 3 {
                    worst3 = worst3.max(r.rel_residual);
                } else {
                    worst4 = worst4.max(r.rel_residual);
                    terms_ok &= r.metric("rhs_terms") == Some(15.0);
                }
                ok &= r.rel_residual <= 1e-6;
            }
            Err(_) => ok = false,
        }
    }
    verdict(
        2,
        "triple and quadruple moments",
        ok && terms_ok,
        &format!("max rel triple {worst3:.2e}, quadruple {worst4:.2e} (<= 1e-6); quadruple RHS has 15 terms: {terms_ok}"),
    );
}

#[test]
fn criterion_03_contour_identity() {
    let spec = SuiteSpec::resolve("square_identity", None, &Overrides { no_timing: true, ..Default::default() }).unwrap();
    let report = run_suite(&spec).unwrap();
    let worst = report.rows.iter().map(|r| r.rel_residual).fold(0.0, f64::max);
    let mut points = Vec::new();
    for sigma in [1.2, 1.5, 2.0] {
        for t in [1.0, 5.0, 10.0] {
            for alpha in [0.0, 0.5, 1.0] {
                points.push((sigma, t, alpha));
            }
        }
    }
    let shifts: Vec<f64> = points
        .par_iter()
        .map(|&(sigma, t, alpha)| {
            let s = c(sigma, t);
            let (lo, hi) = admissible_abscissa(s, s.conj()).unwrap();
            let a = verify_square_identity(s, alpha, Some(lo + 0.3 * (hi - lo)), &cfg()).unwrap();
            let b = verify_square_identity(s, alpha, Some(lo + 0.7 * (hi - lo)), &cfg()).unwrap();
            rel(a.rhs, b.rhs)
        })
        .collect();
    let shift = shifts.iter().cloned().fold(0.0, f64::max);
    let pass = report.rows.len() == 27 && report.all_pass() && worst <= 1e-6 && shift <= 1e-8;
    verdict(3, "contour identity", pass, &format!("27 points, max rel {worst:.2e} (<= 1e-6), abscissa shift {shift:.2e} (<= 1e-8)"));
}

#[test]
fn criterion_04_katsurada() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut pts = Vec::new();
    for j in 0..10 {
        let u = c(rng.gen_range(1.1..1.9), rng.gen_range(-4.0..4.0));
        let v = if j % 2 == 0 { u.conj() } else { c(rng.gen_range(1.1..1.9), rng.gen_range(-4.0..4.0)) };
        pts.push((u, v));
    }
    let res: Vec<f64> = pts.par_iter().map(|(u, v)| verify_katsurada(*u, *v, &cfg()).map(|r| r.rel_residual).unwrap_or(f64::NAN)).collect();
    let worst = res.iter().cloned().fold(0.0, f64::max);
    let pass = res.iter().all(|r| *r <= 1e-6);
    verdict(4, "Katsurada identity", pass, &format!("10 points (5 conjugate pairs), max rel {worst:.2e} (<= 1e-6)"));
}

#[test]
fn criterion_05_i1_asymptotic() {
    let ts = [50.0, 100.0, 200.0, 400.0, 800.0];
    let start = Instant::now();
    let rows: Vec<_> = ts.par_iter().map(|&t| i1_asymptotic_check(&[t], &cfg()).unwrap().remove(0)).collect();
    let secs = start.elapsed().as_secs_f64();
    let scaled: Vec<f64> = rows.iter().map(|r| r.metric("diff_t2").unwrap().abs()).collect();
    let bounded = scaled.iter().all(|d| *d <= 10.0 * scaled[0]);
    let diff800 = rows[4].abs_residual;
    let pass = bounded && diff800 <= 1e-3 && secs <= 600.0;
    let cols: Vec<String> = ts.iter().zip(&scaled).map(|(t, d)| format!("{t}:{d:.3e}")).collect();
    verdict(
        5,
        "I_1 asymptotic",
        pass,
        &format!("|diff| t^2 [{}] (<= 10x t=50: {bounded}); |I_1(800) - rhs| {diff800:.2e} (<= 1e-3); {secs:.1} s", cols.join(" ")),
    );
}

#[test]
fn criterion_06_afe_residuals() {
    let ts = geometric(25.0, 1600.0, 7);
    let mut detail = Vec::new();
    let mut pass = true;
    for (name, f) in [
        ("afe_zeta", afe_zeta_residual as fn(C64, &EvalConfig) -> zeta_core::Result<zeta_core::afe::AfeResidual>),
        ("weak_afe", weak_afe_residual),
    ] {
        let mut all = Vec::new();
        for sigma in [0.3, 0.5, 0.7] {
            let ys: Vec<f64> = ts.par_iter().map(|&t| f(c(sigma, t), &cfg()).map(|r| r.scaled).unwrap_or(f64::NAN)).collect();
            let slope = loglog_slope(&ts, &ys);
            pass &= slope <= 0.1;
            detail.push(format!("{name} s={sigma} slope {slope:.3}"));
            all.extend(ys);
        }
        let mm = max_over_median(&all);
        pass &= mm <= 5.0 && all.iter().all(|y| y.is_finite());
        detail.push(format!("{name} max/median {mm:.2}"));
    }
    verdict(6, "AFE residuals", pass, &format!("{} (slope <= 0.1, max/median <= 5)", detail.join(", ")));
}

#[test]
fn criterion_07_projection_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let zs: Vec<C64> = (0..20).map(|_| c(rng.gen_range(-2.0..1.0), rng.gen_range(-10.0..10.0))).collect();
    let worst: f64 = zs
        .par_iter()
        .map(|z| {
            let mut w = 0.0f64;
            for n in 1..=100u64 {
                for mirrored in [false, true] {
                    let r = projection_identity_check(*z, n, mirrored, &cfg()).unwrap();
                    w = w.max(r.abs_residual / (1.0 + r.lhs.norm()));
                }
            }
            w
        })
        .reduce(|| 0.0, f64::max);
    verdict(7, "projection identities", worst <= 1e-10, &format!("20 z x N=1..100 x both kernels, max residual {worst:.2e} (<= 1e-10)"));
}

#[test]
fn criterion_08_theorem1() {
    let ts = geometric(50.0, 800.0, 9);
    let mut pass = true;
    let mut detail = Vec::new();
    for k in [1u32, 2] {
        let ratios: Vec<f64> = ts.par_iter().map(|&t| theorem1_check(k, &[t], &cfg()).unwrap()[0].ratio).collect();
        let mm = max_over_median(&ratios);
        pass &= mm <= 5.0 && ratios.iter().all(|r| r.is_finite());
        detail.push(format!("k={k} max/median {mm:.2}"));
    }
    verdict(8, "Theorem 1 ratio", pass, &format!("t in [50, 800], {} (<= 5)", detail.join(", ")));
}

#[test]
fn criterion_09_fourier_layer() {
    let mut detail = Vec::new();
    // Parseval for the second moment, against I_1 on the critical line
    let mut p2 = 0.0f64;
    for t in [10.0, 50.0, 100.0] {
        let r = parseval_second_moment(c(0.5, t), second_moment_cutoff(t), &cfg()).unwrap();
        let i1 = power_mean_ik(1, t, &cfg()).unwrap().value;
        p2 = p2.max(r.rel_residual).max((r.rhs.re - i1).abs() / i1);
    }
    let ok_p2 = p2 <= 1e-4;
    detail.push(format!("Parseval |a_n|^2 vs I_1 {p2:.2e} (<= 1e-4)"));

    let cases = [(c(2.2, 1.0), c(1.8, -0.5)), (c(2.0, 3.0), c(2.0, -3.0)), (c(1.5, 0.0), c(2.5, 0.0))];
    let mut conv = 0.0f64;
    let mut quad = 0.0f64;
    for (u, v) in cases {
        for n in [-4i64, 0, 1, 7] {
            let q = qn_direct(n, u, v, &cfg()).unwrap();
            conv = conv.max(rel(q, qn_convolution(n, u, v, 2000, &cfg()).unwrap()));
            quad = quad.max(rel(q, qn_fourier_quadrature(n, u, v, &cfg()).unwrap().value));
        }
    }
    let ok_q = conv <= 1e-6 && quad <= 1e-6;
    detail.push(format!("q_n vs convolution {conv:.2e}, vs quadrature {quad:.2e} (<= 1e-6)"));

    let p4 = parseval_fourth_moment(c(0.5, 50.0), 1.0, 100, &cfg()).unwrap().rel_residual;
    let ok_p4 = p4 <= 1e-3;
    detail.push(format!("fourth-moment Parseval t=50 {p4:.2e} (<= 1e-3)"));

    let mut tail = 0.0f64;
    for t in [20.0, 50.0, 100.0] {
        for eta in [0.5, 1.0, 2.0] {
            let start = t / TAU + eta;
            let alphas: Vec<f64> = (0..6).map(|j| start * 1.6f64.powi(j)).collect();
            tail = tail.max(tail_lemma_estimate(c(0.5, t), eta, &alphas, &cfg()).unwrap().bound_constant);
        }
    }
    let mut high = 0.0f64;
    for t in [50.0, 100.0] {
        let f = (t / TAU).floor() as i64;
        for n in [f + 1, f + 3, 2 * f, 4 * f, -(f + 1), -4 * f] {
            let u = c(0.5, t);
            high = high.max(highfreq_tail_check(n, u, u.conj(), 1.0, &cfg()).unwrap().metric("ratio").unwrap());
        }
    }
    let ok_tails = tail.is_finite() && high.is_finite() && tail <= 1.0 && high <= 1.0;
    detail.push(format!("tail-lemma ratio {tail:.3}, high-frequency ratio {high:.3} (bounded by 1)"));
    verdict(9, "Fourier layer", ok_p2 && ok_q && ok_p4 && ok_tails, &detail.join("; "));
}

#[test]
fn criterion_10_theorem2() {
    let ts = [50.0, 100.0, 200.0, 400.0];
    let recs: Vec<_> = ts.par_iter().map(|&t| theorem2_check(&[t], 1.0, &cfg()).unwrap().remove(0)).collect();
    let ratios: Vec<f64> = recs.iter().map(|r| r.ratio).collect();
    let sums: Vec<f64> = recs.iter().map(|r| r.sum).collect();
    let mm = max_over_median(&ratios);
    let growth = loglog_slope(&ts, &sums);
    let pass = ratios.iter().all(|r| r.is_finite() && *r > 0.0) && mm <= 5.0;
    let rs: Vec<String> = ts.iter().zip(&ratios).map(|(t, r)| format!("{t}:{r:.3e}")).collect();
    verdict(10, "Theorem 2 harness", pass, &format!("ratios [{}], max/median {mm:.2} (<= 5); sum grows like t^{growth:.3}", rs.join(" ")));
}

#[test]
fn criterion_11_closed_forms_and_oracle() {
    let quiet = Overrides { no_timing: true, ..Default::default() };
    let closed = run_suite(&SuiteSpec::resolve("closed_form", None, &quiet).unwrap()).unwrap();
    let failed: Vec<&str> = closed.rows.iter().filter(|r| r.status != zeta_verify::Status::Pass).map(|r| r.identity_id.as_str()).collect();
    let oracle = run_suite(&SuiteSpec::resolve("oracle_precision", None, &quiet).unwrap()).unwrap();
    let worst_oracle = oracle.rows.iter().filter_map(|r| r.metric("err_ratio")).fold(0.0, f64::max);

    let cli_cfg = cfg();
    let val = |f: &str, a: EvalArgs| evaluate(f, &a, &cli_cfg).unwrap();
    let zeta2 = val("zeta", EvalArgs { s: Some(c(2.0, 0.0)), ..Default::default() });
    let zeta1 = val("zeta1", EvalArgs { s: Some(c(2.0, 0.0)), alpha: Some(1.0), ..Default::default() });
    let bn = val("B_N", EvalArgs { big_n: Some(5), alpha: Some(0.0), ..Default::default() });
    let pi2 = std::f64::consts::PI.powi(2) / 6.0;
    let evals_ok = ((zeta2.re - pi2) / pi2).abs() <= 1e-10
        && ((zeta1.re - (pi2 - 1.0)) / (pi2 - 1.0)).abs() <= 1e-10
        && (bn.re - 5.0).abs() <= 1e-10 * 5.0;
    let labels: Vec<String> = registry().iter().map(|s| s.label()).collect();
    let anchors_ok = ["square_identity (Eq. 1.5)", "katsurada (Eq. I1)", "theorem2 (Thm 2)"].iter().all(|l| labels.iter().any(|x| x == l));
    let infos: Vec<SuiteInfo> = registry().iter().map(SuiteInfo::from).collect();
    let machine: serde_json::Value = serde_json::from_str(&serde_json::to_string(&infos).unwrap()).unwrap();
    let machine_ok = machine.as_array().map(|a| a.len()) == Some(labels.len());
    let unknown_ok = matches!(SuiteSpec::resolve("unknown", None, &Overrides::default()), Err(VerifyError::Config(_)));
    let registry_ok = anchors_ok && labels.len() >= 14 && machine_ok && unknown_ok;

    let pass = failed.is_empty() && oracle.rows.len() == 100 && oracle.all_pass() && evals_ok && registry_ok;
    verdict(
        11,
        "closed forms and oracle tier",
        pass,
        &format!(
            "{} closed-form cases, failing {:?}; oracle 100 points, max |f64-dd|/reported {worst_oracle:.2e} (<= 1); cli values {evals_ok}; registry {} suites {registry_ok}",
            closed.rows.len(),
            failed,
            labels.len()
        ),
    );
}
