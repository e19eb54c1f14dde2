use crate::error::{Error, Result};
use crate::special::gamma::ln_gamma;
use crate::{c64, C64};

/// `int_0^oo b^(-v) (1 + b)^(-u) db = Gamma(1 - v) Gamma(u + v - 1) / Gamma(u)`
/// for `Re v < 1` and `Re(u + v) > 1`.
pub fn beta_integral(u: C64, v: C64) -> Result<C64> {
    if !(v.re < 1.0) {
        return Err(Error::Domain { function: "beta_integral", reason: "requires Re v < 1" });
    }
    if !((u + v).re > 1.0) {
        return Err(Error::Domain { function: "beta_integral", reason: "requires Re(u + v) > 1" });
    }
    let one = c64(1.0, 0.0);
    Ok((ln_gamma(one - v)? + ln_gamma(u + v - 1.0)? - ln_gamma(u)?).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::PI;

    #[test]
    fn closed_forms() {
        let b = beta_integral(c64(1.0, 0.0), c64(0.5, 0.0)).unwrap();
        assert!((b.re - PI).abs() < 1e-14);
        let h = beta_integral(c64(2.0, 0.0), c64(0.0, 0.0)).unwrap();
        assert!((h.re - 1.0).abs() < 1e-15);
        assert!(beta_integral(c64(0.2, 0.0), c64(0.5, 0.0)).is_err());
        assert!(beta_integral(c64(2.0, 0.0), c64(1.0, 0.0)).is_err());
    }
}
