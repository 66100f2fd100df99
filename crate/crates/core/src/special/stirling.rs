//! Stirling numbers of the second kind, geometric polynomials and exact
//! binomial coefficients.

use std::sync::OnceLock;

use crate::types::{ComplexScalar, Error, Result};

/// Exactness ceiling for {n k}: every value up to n = 40 fits in 128-bit
/// integers; above the ceiling the operation errors instead of wrapping.
pub const STIRLING_CEILING: u32 = 40;

fn stirling_table() -> &'static Vec<Vec<u128>> {
    static TABLE: OnceLock<Vec<Vec<u128>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let n = STIRLING_CEILING as usize;
        let mut t = vec![vec![0u128; n + 1]; n + 1];
        t[0][0] = 1;
        for i in 1..=n {
            for k in 1..=i {
                // {i, k} = k {i-1, k} + {i-1, k-1}; checked arithmetic
                // guards the table build even if the ceiling moves.
                let a = (k as u128).checked_mul(t[i - 1][k]).expect("stirling overflow");
                t[i][k] = a.checked_add(t[i - 1][k - 1]).expect("stirling overflow");
            }
        }
        t
    })
}

/// Exact {n k}, the number of partitions of an n-set into k blocks.
pub fn stirling2(n: u32, k: u32) -> Result<u128> {
    if n > STIRLING_CEILING {
        return Err(Error::Overflow("stirling2 above its exactness ceiling"));
    }
    if k > n {
        return Ok(0);
    }
    Ok(stirling_table()[n as usize][k as usize])
}

/// Exact binomial coefficient, usable up to p = 30 comfortably.
pub fn binomial(n: u32, k: u32) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or(Error::Overflow("binomial"))?
            / (i as u128 + 1);
    }
    Ok(acc)
}

pub fn binomial_f(n: u32, k: u32) -> f64 {
    binomial(n, k).map(|v| v as f64).unwrap_or(f64::INFINITY)
}

/// Geometric polynomial ω_n(x) = Σ_k {n k} k! x^k.
pub fn geometric_poly(n: u32, x: ComplexScalar) -> Result<ComplexScalar> {
    if n > STIRLING_CEILING {
        return Err(Error::Overflow("geometric_poly above the stirling ceiling"));
    }
    let table = stirling_table();
    let mut acc = ComplexScalar::new(0.0, 0.0);
    let mut xpow = ComplexScalar::new(1.0, 0.0);
    let mut factorial = 1.0f64;
    for (k, &coeff) in table[n as usize].iter().enumerate().take(n as usize + 1) {
        if k > 0 {
            factorial *= k as f64;
            xpow *= x;
        }
        acc += xpow * (coeff as f64 * factorial);
    }
    Ok(acc)
}
