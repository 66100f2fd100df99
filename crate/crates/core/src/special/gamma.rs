//! Digamma and logGamma on the right half-plane, plus the full-plane
//! Gamma value used as a contour prefactor.

use crate::special::bernoulli::bernoulli_number;
use crate::types::{ComplexScalar, Error, EvalResult, Method, Result};

const SHIFT_THRESHOLD: f64 = 12.0;

fn is_nonpositive_integer(s: ComplexScalar) -> bool {
    s.im == 0.0 && s.re <= 0.0 && s.re.fract() == 0.0
}

/// ψ(n+1) = -γ + H_n as (harmonic, γ-coefficient) folded into a value.
pub fn psi_int(n: u32) -> f64 {
    let mut h = 0.0;
    for k in 1..=n {
        h += 1.0 / k as f64;
    }
    h - euler_gamma()
}

/// H_n alone, without the Euler-constant part.
pub fn harmonic(n: u32) -> f64 {
    (1..=n).map(|k| 1.0 / k as f64).sum()
}

/// Euler's constant γ = -ψ(1), produced by the digamma path itself.
pub fn euler_gamma() -> f64 {
    // ψ(1) via shift + asymptotic expansion, hard-wired to avoid
    // recursion through psi_int.
    static GAMMA: std::sync::OnceLock<f64> = std::sync::OnceLock::new();
    *GAMMA.get_or_init(|| -digamma_raw(ComplexScalar::new(1.0, 0.0)).re)
}

fn digamma_raw(s: ComplexScalar) -> ComplexScalar {
    let mut z = s;
    let mut acc = ComplexScalar::new(0.0, 0.0);
    while z.re < SHIFT_THRESHOLD {
        acc -= z.inv();
        z += 1.0;
    }
    // Asymptotic series: ln z - 1/(2z) - Σ B_{2k}/(2k z^{2k}).
    let mut v = z.ln() - (z * 2.0).inv();
    let z2inv = (z * z).inv();
    let mut zpow = z2inv;
    for k in 1..=8u32 {
        let b = bernoulli_number(2 * k).unwrap();
        v -= zpow * (b / (2.0 * k as f64));
        zpow *= z2inv;
    }
    v + acc
}

/// Digamma via upward recurrence and the asymptotic expansion.
pub fn digamma(s: ComplexScalar) -> Result<EvalResult> {
    if is_nonpositive_integer(s) {
        return Err(Error::Pole(format!("digamma pole at s = {s}")));
    }
    Ok(EvalResult::new(digamma_raw(s), 1e-14, Method::Series))
}

fn log_gamma_raw(s: ComplexScalar) -> ComplexScalar {
    // Shift into the Stirling region, accumulating the product logs.
    // All logs are principal; every shifted point stays in Re > 0.
    let mut z = s;
    let mut acc = ComplexScalar::new(0.0, 0.0);
    while z.re < SHIFT_THRESHOLD {
        acc += z.ln();
        z += 1.0;
    }
    let half_log_2pi = 0.5 * (2.0 * std::f64::consts::PI).ln();
    let mut v = (z - 0.5) * z.ln() - z + half_log_2pi;
    let zinv = z.inv();
    let z2inv = zinv * zinv;
    let mut zpow = zinv;
    for k in 1..=8u32 {
        let b = bernoulli_number(2 * k).unwrap();
        let kf = 2.0 * k as f64;
        v += zpow * (b / (kf * (kf - 1.0)));
        zpow *= z2inv;
    }
    v - acc
}

/// Principal-branch logΓ(s) for Re(s) > 0.
pub fn log_gamma(s: ComplexScalar) -> Result<EvalResult> {
    if is_nonpositive_integer(s) {
        return Err(Error::Pole(format!("logGamma pole at s = {s}")));
    }
    if s.re <= 0.0 {
        return Err(Error::Domain(
            "log_gamma requires Re(s) > 0 (principal branch)".into(),
        ));
    }
    Ok(EvalResult::new(log_gamma_raw(s), 1e-14, Method::Series))
}

/// Γ(s) anywhere except the poles; reflection covers Re(s) ≤ 1/2.
pub fn gamma_fn(s: ComplexScalar) -> Result<ComplexScalar> {
    if is_nonpositive_integer(s) {
        return Err(Error::Pole(format!("Gamma pole at s = {s}")));
    }
    if s.re > 0.5 {
        Ok(log_gamma_raw(s).exp())
    } else {
        // Γ(s) = π / (sin(πs) Γ(1-s))
        let pi = std::f64::consts::PI;
        let sinpis = (s * pi).sin();
        Ok(pi / (sinpis * log_gamma_raw(ComplexScalar::new(1.0, 0.0) - s).exp()))
    }
}
