//! Bernoulli numbers and polynomials, and the exact-formula values
//! ζ(-n, a) = -B_{n+1}(a)/(n+1).

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::types::{AParam, ComplexScalar, Error, Result};

/// Bernoulli numbers are cached as f64 up to this index; above it the
/// operations error rather than silently losing precision.
pub const BERNOULLI_CEILING: u32 = 60;

/// B_0 .. B_60 with the B_1 = -1/2 convention, computed exactly in
/// rational arithmetic and rounded once.
fn bernoulli_table() -> &'static Vec<f64> {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let n = BERNOULLI_CEILING as usize;
        let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
        b.push(BigRational::from_integer(BigInt::from(1)));
        for m in 1..=n {
            // B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k
            let mut acc = BigRational::zero();
            let mut binom = BigInt::from(1); // C(m+1, 0)
            for (k, bk) in b.iter().enumerate() {
                acc += BigRational::from_integer(binom.clone()) * bk;
                binom = binom * BigInt::from(m as i64 + 1 - k as i64) / BigInt::from(k as i64 + 1);
            }
            let bm = -acc / BigRational::from_integer(BigInt::from(m as i64 + 1));
            b.push(bm);
        }
        b.iter().map(|r| r.to_f64().unwrap()).collect()
    })
}

/// The Bernoulli number B_n (B_1 = -1/2).
pub fn bernoulli_number(n: u32) -> Result<f64> {
    if n > BERNOULLI_CEILING {
        return Err(Error::OrderTooLarge {
            what: "bernoulli number",
            order: n,
            ceiling: BERNOULLI_CEILING,
        });
    }
    Ok(bernoulli_table()[n as usize])
}

/// B_n(x) via the binomial expansion over cached Bernoulli numbers.
pub fn bernoulli_poly(n: u32, x: ComplexScalar) -> Result<ComplexScalar> {
    if n > BERNOULLI_CEILING {
        return Err(Error::OrderTooLarge {
            what: "bernoulli polynomial",
            order: n,
            ceiling: BERNOULLI_CEILING,
        });
    }
    let table = bernoulli_table();
    // Horner in x over coefficients C(n,k) B_k, k = 0..n: the term with
    // x^{n-k} carries B_k, so iterate k upward while peeling powers.
    let mut acc = ComplexScalar::new(0.0, 0.0);
    let mut binom = 1.0f64;
    let mut xpow = vec![ComplexScalar::new(1.0, 0.0); n as usize + 1];
    for i in 1..=n as usize {
        xpow[i] = xpow[i - 1] * x;
    }
    for k in 0..=n {
        acc += xpow[(n - k) as usize] * (binom * table[k as usize]);
        binom = binom * (n - k) as f64 / (k + 1) as f64;
    }
    Ok(acc)
}

/// ζ(-n, a) = -B_{n+1}(a)/(n+1), exact-formula path.
pub fn zeta_neg_int(n: u32, a: AParam) -> Result<ComplexScalar> {
    if n > BERNOULLI_CEILING - 1 {
        return Err(Error::OrderTooLarge {
            what: "zeta at negative integers",
            order: n,
            ceiling: BERNOULLI_CEILING - 1,
        });
    }
    Ok(-bernoulli_poly(n + 1, a.value())? / (n as f64 + 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> ComplexScalar {
        ComplexScalar::new(x, 0.0)
    }

    #[test]
    fn small_bernoulli_numbers() {
        assert_eq!(bernoulli_number(0).unwrap(), 1.0);
        assert_eq!(bernoulli_number(1).unwrap(), -0.5);
        assert!((bernoulli_number(2).unwrap() - 1.0 / 6.0).abs() < 1e-16);
        assert_eq!(bernoulli_number(3).unwrap(), 0.0);
        assert!((bernoulli_number(12).unwrap() + 691.0 / 2730.0).abs() < 1e-15);
        assert!(bernoulli_number(61).is_err());
    }

    #[test]
    fn b2_is_quadratic() {
        // B_2(a) = a^2 - a + 1/6
        for a in [0.3, 1.0, 2.5] {
            let v = bernoulli_poly(2, c(a)).unwrap();
            assert!((v.re - (a * a - a + 1.0 / 6.0)).abs() < 1e-15);
        }
    }

    #[test]
    fn b0_is_one() {
        assert_eq!(bernoulli_poly(0, c(7.3)).unwrap(), c(1.0));
    }

    #[test]
    fn odd_polys_vanish_at_half() {
        for n in [3u32, 5, 7, 9] {
            assert!(bernoulli_poly(n, c(0.5)).unwrap().norm() < 1e-15);
        }
    }

    #[test]
    fn zeta_neg_values() {
        let a1 = AParam::real(1.0).unwrap();
        // ζ(-1, 1) = -1/12
        let v = zeta_neg_int(1, a1).unwrap();
        assert!((v.re + 1.0 / 12.0).abs() < 1e-15);
        // ζ(0, a) = 1/2 - a
        let a = AParam::real(2.5).unwrap();
        let v = zeta_neg_int(0, a).unwrap();
        assert!((v.re - (0.5 - 2.5)).abs() < 1e-15);
    }
}
