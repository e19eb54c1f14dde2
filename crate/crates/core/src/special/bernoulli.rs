use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// `B_2, B_4, ..., B_60` rounded to double precision.
pub const BERNOULLI_2K: [f64; 30] = [
    0.16666666666666666,
    -0.03333333333333333,
    0.023809523809523808,
    -0.03333333333333333,
    0.07575757575757576,
    -0.2531135531135531,
    1.1666666666666667,
    -7.092156862745098,
    54.971177944862156,
    -529.1242424242424,
    6192.123188405797,
    -86580.25311355312,
    1425517.1666666667,
    -27298231.067816094,
    601580873.9006424,
    -15116315767.092157,
    429614643061.1667,
    -13711655205088.332,
    488332318973593.2,
    -1.9296579341940068e+16,
    8.416930475736826e+17,
    -4.0338071854059454e+19,
    2.1150748638081993e+21,
    -1.2086626522296526e+23,
    7.500866746076964e+24,
    -5.038778101481069e+26,
    3.6528776484818122e+28,
    -2.849876930245088e+30,
    2.3865427499683627e+32,
    -2.1399949257225335e+34,
];

/// `B_{2k}` for `1 <= k <= 30`.
#[inline]
pub fn bernoulli_2k(k: usize) -> f64 {
    BERNOULLI_2K[k - 1]
}

/// Exact `B_0, ..., B_m` with the convention `B_1 = -1/2`.
pub fn bernoulli_rational(m: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(m + 1);
    b.push(BigRational::one());
    for n in 1..=m {
        // sum_{k=0}^{n} C(n+1, k) B_k = 0
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one();
        for (k, bk) in b.iter().enumerate() {
            acc += BigRational::from_integer(binom.clone()) * bk;
            binom = binom * BigInt::from(n + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(n + 1)));
    }
    b
}

/// `B_0, ..., B_m` as doubles.
pub fn bernoulli_numbers(m: usize) -> Vec<f64> {
    bernoulli_rational(m)
        .iter()
        .map(|r| r.to_f64().unwrap_or(f64::NAN))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let b = bernoulli_numbers(6);
        assert_eq!(b[0], 1.0);
        assert_eq!(b[1], -0.5);
        assert!((b[2] - 1.0 / 6.0).abs() < 1e-16);
        assert_eq!(b[3], 0.0);
        assert!((b[4] + 1.0 / 30.0).abs() < 1e-16);
        assert_eq!(b[5], 0.0);
        assert!((b[6] - 1.0 / 42.0).abs() < 1e-16);
    }

    #[test]
    fn table_matches_recurrence() {
        let b = bernoulli_numbers(60);
        for k in 1..=30 {
            let exact = b[2 * k];
            assert_eq!(exact, bernoulli_2k(k), "k = {k}");
        }
        for k in 1..30 {
            assert_eq!(b[2 * k + 1], 0.0);
        }
    }
}
