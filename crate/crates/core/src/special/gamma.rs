use crate::error::{Error, Result};
use crate::special::cmath::ln_sin;
use crate::{c64, C64, PI};

const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS: [f64; 15] = [
    0.999_999_999_999_997_09,
    57.156_235_665_862_923_5,
    -59.597_960_355_475_491_2,
    14.136_097_974_741_747_1,
    -0.491_913_816_097_620_199,
    0.339_946_499_848_118_887e-4,
    0.465_236_289_270_485_756e-4,
    -0.983_744_753_048_795_646e-4,
    0.158_088_703_224_912_494e-3,
    -0.210_264_441_724_104_883e-3,
    0.217_439_618_115_212_643e-3,
    -0.164_318_106_536_763_890e-3,
    0.844_182_239_838_527_433e-4,
    -0.261_908_384_015_814_087e-4,
    0.368_991_826_595_316_234e-5,
];
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

fn is_pole(z: C64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

fn ln_gamma_right(z: C64) -> C64 {
    let mut ser = c64(LANCZOS[0], 0.0);
    for (j, &c) in LANCZOS.iter().enumerate().skip(1) {
        ser += c / (z + j as f64);
    }
    let t = z + (LANCZOS_G + 0.5);
    (z + 0.5) * t.ln() - t + LN_SQRT_2PI + ser.ln() - z.ln()
}

/// Principal-branch-free `ln Gamma(z)`: `exp` of the result is `Gamma(z)`.
///
/// The imaginary part is not normalised to the principal branch.
pub fn ln_gamma(z: C64) -> Result<C64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain { function: "gamma", reason: "non-finite argument" });
    }
    if is_pole(z) {
        return Err(Error::Pole { function: "gamma", at: z });
    }
    if z.re >= 0.5 {
        Ok(ln_gamma_right(z))
    } else {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        Ok(c64(PI.ln(), 0.0) - ln_sin(z * PI) - ln_gamma_right(c64(1.0, 0.0) - z))
    }
}

/// Complex Gamma function.
pub fn gamma(z: C64) -> Result<C64> {
    ln_gamma(z).map(|l| l.exp())
}

/// Gamma together with a conservative absolute error estimate.
pub fn gamma_with_error(z: C64) -> Result<(C64, f64)> {
    let l = ln_gamma(z)?;
    let v = l.exp();
    let err = v.norm() * f64::EPSILON * (32.0 + 4.0 * l.norm());
    Ok((v, err))
}
