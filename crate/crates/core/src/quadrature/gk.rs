use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{infallible, QuadResult};
use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::{c64, C64};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

struct Piece {
    a: f64,
    b: f64,
    value: C64,
    err: f64,
    resabs: f64,
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.err.total_cmp(&other.err) == Ordering::Equal
    }
}
impl Eq for Piece {}
impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Piece {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err).then_with(|| other.a.total_cmp(&self.a))
    }
}

fn gk15<F: FnMut(f64) -> Result<C64>>(f: &mut F, a: f64, b: f64) -> Result<Piece> {
    let centr = 0.5 * (a + b);
    let hlgth = 0.5 * (b - a);
    let fc = f(centr)?;
    let mut resg = fc * WG[3];
    let mut resk = fc * WGK[7];
    let mut fv1 = [c64(0.0, 0.0); 7];
    let mut fv2 = [c64(0.0, 0.0); 7];
    for j in 0..7 {
        let absc = hlgth * XGK[j];
        let f1 = f(centr - absc)?;
        let f2 = f(centr + absc)?;
        fv1[j] = f1;
        fv2[j] = f2;
        resk += (f1 + f2) * WGK[j];
        if j % 2 == 1 {
            resg += (f1 + f2) * WG[j / 2];
        }
    }
    let reskh = resk * 0.5;
    let mut resabs = fc.norm() * WGK[7];
    let mut resasc = WGK[7] * (fc - reskh).norm();
    for j in 0..7 {
        resabs += WGK[j] * (fv1[j].norm() + fv2[j].norm());
        resasc += WGK[j] * ((fv1[j] - reskh).norm() + (fv2[j] - reskh).norm());
    }
    let h = hlgth.abs();
    let value = resk * hlgth;
    resabs *= h;
    resasc *= h;
    let mut err = ((resk - resg) * hlgth).norm();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * resabs);
    }
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(Error::Domain { function: "quadrature", reason: "integrand returned a non-finite value" });
    }
    Ok(Piece { a, b, value, err, resabs })
}

/// Globally adaptive Gauss-Kronrod (7, 15) integration over consecutive
/// sub-intervals given by `breaks`.
pub fn try_integrate_with_breaks<F>(mut f: F, breaks: &[f64], cfg: &EvalConfig) -> Result<QuadResult>
where
    F: FnMut(f64) -> Result<C64>,
{
    if breaks.len() < 2 {
        return Ok(QuadResult::ZERO);
    }
    let mut heap = BinaryHeap::with_capacity(breaks.len() * 2);
    let mut done: Vec<Piece> = Vec::new();
    let mut evals = 0usize;
    let mut total = c64(0.0, 0.0);
    let mut err_total = 0.0;
    let mut abs_total = 0.0;
    for w in breaks.windows(2) {
        if w[0] == w[1] {
            continue;
        }
        let p = gk15(&mut f, w[0], w[1])?;
        evals += 15;
        total += p.value;
        err_total += p.err;
        abs_total += p.resabs;
        heap.push(p);
    }
    let max_pieces = cfg.max_subdivisions.max(breaks.len() + 16);
    let mut count = heap.len();
    loop {
        let target = cfg.target(total.norm()).max(100.0 * f64::EPSILON * abs_total);
        if err_total <= target {
            break;
        }
        let Some(worst) = heap.pop() else { break };
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a.min(worst.b) && mid < worst.a.max(worst.b)) || (worst.b - worst.a).abs() < 1e-14 * mid.abs().max(1e-300) {
            done.push(worst);
            continue;
        }
        if count >= max_pieces {
            return Err(Error::Convergence { evaluations: evals, estimate: err_total, target });
        }
        let l = gk15(&mut f, worst.a, mid)?;
        let r = gk15(&mut f, mid, worst.b)?;
        evals += 30;
        count += 1;
        total += l.value + r.value - worst.value;
        err_total += l.err + r.err - worst.err;
        abs_total += l.resabs + r.resabs - worst.resabs;
        heap.push(l);
        heap.push(r);
    }
    let mut pieces: Vec<Piece> = heap.into_vec();
    pieces.extend(done);
    pieces.sort_by(|x, y| x.a.total_cmp(&y.a));
    let mut value = crate::sum::ComplexSum::new();
    let mut error = 0.0;
    for p in &pieces {
        value.add(p.value);
        error += p.err;
    }
    Ok(QuadResult { value: value.value(), error, evaluations: evals })
}

/// Adaptive integration of `f` over `[a, b]`.
pub fn try_integrate_finite<F>(f: F, a: f64, b: f64, cfg: &EvalConfig) -> Result<QuadResult>
where
    F: FnMut(f64) -> Result<C64>,
{
    try_integrate_with_breaks(f, &[a, b], cfg)
}

/// Adaptive integration of an infallible integrand over `[a, b]`.
pub fn integrate_finite<F>(f: F, a: f64, b: f64, cfg: &EvalConfig) -> Result<QuadResult>
where
    F: FnMut(f64) -> C64,
{
    try_integrate_finite(infallible(f), a, b, cfg)
}

/// Adaptive integration of an infallible integrand over consecutive breaks.
pub fn integrate_with_breaks<F>(f: F, breaks: &[f64], cfg: &EvalConfig) -> Result<QuadResult>
where
    F: FnMut(f64) -> C64,
{
    try_integrate_with_breaks(infallible(f), breaks, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial() {
        let r = integrate_finite(|x| c64(x * x, 0.0), 0.0, 1.0, &EvalConfig::default()).unwrap();
        assert!((r.value.re - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn sqrt_singularity() {
        let r = integrate_finite(|x| c64(1.0 / x.sqrt(), 0.0), 0.0, 1.0, &EvalConfig::default()).unwrap();
        assert!((r.value.re - 2.0).abs() < 1e-10, "{:?}", r);
    }

    #[test]
    fn oscillation_with_breaks() {
        let n = 40;
        let breaks: Vec<f64> = (0..=n).map(|k| k as f64 / n as f64).collect();
        let r = integrate_with_breaks(|x| c64(0.0, 2.0 * crate::PI * 20.0 * x).exp(), &breaks, &EvalConfig::default()).unwrap();
        assert!(r.value.norm() < 1e-14);
    }

    #[test]
    fn budget_exhaustion_reports_convergence_error() {
        let cfg = EvalConfig { max_subdivisions: 3, ..EvalConfig::default() };
        let r = integrate_finite(|x| c64((1.0 / x).sin() / x, 0.0), 1e-6, 1.0, &cfg);
        assert!(matches!(r, Err(Error::Convergence { .. })));
    }
}
