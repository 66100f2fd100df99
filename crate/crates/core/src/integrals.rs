//! Closed-form log-gamma moment integrals, digamma moments,
//! negative-order polygamma functions, and the g-family
//! antiderivative rule.
//!
//! Complex upper limits are interpreted along the straight segment
//! from 0 to t.

use crate::quad::segment_quadrature;
use crate::series::{s_closed, SeriesQuery};
use crate::special::{
    barnes_log_g, binomial_f, constants, digamma, g, hurwitz_zeta_sderiv, log_gamma,
};
use crate::types::{AParam, ComplexScalar, Error, Result};

const MOMENT_CEILING: u32 = 20;

/// One moment integral ∫₀^t s^m logΓ(a+s) ds.
#[derive(Debug, Clone, Copy)]
pub struct MomentQuery {
    pub t: ComplexScalar,
    pub a: AParam,
    pub m: u32,
}

impl MomentQuery {
    pub fn new(t: ComplexScalar, a: AParam, m: u32) -> Result<Self> {
        let q = MomentQuery { t, a, m };
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<()> {
        if self.t.norm() >= self.a.value().re {
            return Err(Error::Domain(format!(
                "|t| < Re(a) required, got |t| = {} with Re(a) = {}",
                self.t.norm(),
                self.a.value().re
            )));
        }
        if self.m > MOMENT_CEILING {
            return Err(Error::Domain(format!(
                "moment order {} exceeds the supported ceiling {MOMENT_CEILING}",
                self.m
            )));
        }
        Ok(())
    }
}

/// The three equivalent routes for the m = 0 moment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum M0Form {
    GForm,
    ZetaForm,
    BarnesForm,
}

/// ∫₀^t s^m logΓ(a+s) ds in closed form via the g-family.
pub fn log_gamma_moment(q: &MomentQuery) -> Result<ComplexScalar> {
    q.validate()?;
    log_gamma_moment_unchecked(q.t, q.a, q.m)
}

/// Same closed form without the |t| < Re(a) restriction. The closed
/// form analytically continues to any t with Re(a + t) > 0, which the
/// shifted arguments check implicitly; used internally where the
/// series-derived bound is not needed.
fn log_gamma_moment_unchecked(t: ComplexScalar, a: AParam, m: u32) -> Result<ComplexScalar> {
    if t.norm() == 0.0 {
        return Ok(ComplexScalar::new(0.0, 0.0));
    }
    let k = constants();
    let av = a.value();
    let mf = m as f64;
    let a_plus_t = a.shifted(t)?;
    let mut acc = t.powu(m + 2) * (-k.gamma / (mf + 2.0));
    acc += t.powu(m + 1) * (ComplexScalar::new(k.log_sqrt_2pi + 0.5 * k.gamma, 0.0) - av * k.gamma)
        / (mf + 1.0);
    for j in 0..=m {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        acc += g(j + 1, a_plus_t)?.value * t.powu(m - j) * (sign * binomial_f(m, j) / (j as f64 + 1.0));
    }
    let sign_m = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    acc -= g(m + 1, a)?.value * (sign_m / (mf + 1.0));
    Ok(acc)
}

/// The m = 0 moment by one of three algebraically equivalent paths:
/// g-family differences, ζ'(-1,·) differences, or logΓ and the Barnes
/// G-function.
pub fn log_gamma_integral_m0(q: &MomentQuery, form: M0Form) -> Result<ComplexScalar> {
    q.validate()?;
    if q.m != 0 {
        return Err(Error::Domain("the specialized m = 0 forms require m = 0".into()));
    }
    let t = q.t;
    let a = q.a;
    let av = a.value();
    let k = constants();
    match form {
        M0Form::GForm => log_gamma_moment_unchecked(t, a, 0),
        M0Form::ZetaForm => {
            let a_plus_t = a.shifted(t)?;
            let s = ComplexScalar::new(-1.0, 0.0);
            let poly = -t * t / 2.0 + t * (k.log_sqrt_2pi + 0.5 - av);
            Ok(poly + hurwitz_zeta_sderiv(s, a_plus_t)?.value - hurwitz_zeta_sderiv(s, a)?.value)
        }
        M0Form::BarnesForm => {
            let a_plus_t = a.shifted(t)?;
            let one = ComplexScalar::new(1.0, 0.0);
            let poly = -t * t / 2.0 + t * (k.log_sqrt_2pi + 0.5 - av);
            Ok(poly + (a_plus_t.value() - one) * log_gamma(a_plus_t.value())?.value
                - barnes_log_g(a_plus_t)?.value
                - (av - one) * log_gamma(av)?.value
                + barnes_log_g(a)?.value)
        }
    }
}

/// ∫₀^t s^{p-1} ψ(a - s) ds = ψ(a) t^p / p − S(t, a, p), p ≥ 1.
pub fn psi_moment(t: ComplexScalar, a: AParam, p: u32) -> Result<ComplexScalar> {
    if p == 0 {
        return Err(Error::Domain("psi moment order p must be positive".into()));
    }
    let q = SeriesQuery::new(t, a, p)?;
    let psi_a = digamma(a.value())?.value;
    Ok(psi_a * t.powu(p) / p as f64 - s_closed(&q)?)
}

/// Negative-order polygamma: k = 1 is logΓ(t); k ≥ 2 is the iterated
/// antiderivative (1/(k-2)!) ∫₀^t (t-s)^{k-2} logΓ(s) ds.
///
/// The singular endpoint logΓ(s) ~ -ln s is handled exactly by the
/// split logΓ(s) = logΓ(1+s) - ln s: the regular part goes through
/// the closed-form moments at a = 1 and the ln s part integrates in
/// elementary terms.
pub fn negative_polygamma(k: u32, t: f64) -> Result<ComplexScalar> {
    if t <= 0.0 {
        return Err(Error::Domain(format!("t must be positive, got {t}")));
    }
    if k == 0 || k > 10 {
        return Err(Error::Domain(format!("order k must satisfy 1 <= k <= 10, got {k}")));
    }
    let tc = ComplexScalar::new(t, 0.0);
    if k == 1 {
        return Ok(log_gamma(tc)?.value);
    }
    let n = k - 2;
    let a1 = AParam::real(1.0)?;
    let mut acc = ComplexScalar::new(0.0, 0.0);
    for j in 0..=n {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        // M_j(t) = ∫₀^t s^j logΓ(s) ds with the ln s part peeled off
        let jf = j as f64;
        let log_part = t.powi(j as i32 + 1) / (jf + 1.0) * (t.ln() - 1.0 / (jf + 1.0));
        let mj = log_gamma_moment_unchecked(tc, a1, j)? - log_part;
        acc += mj * (sign * binomial_f(n, n - j) * t.powi((n - j) as i32));
    }
    Ok(acc / factorial(n))
}

/// (1/m)[g(m, a+t) − g(m, a)], checked on the fly against the
/// quadrature of ∫₀^t g(m-1, a+s) ds.
pub fn g_integral_rule(m: u32, a: AParam, t: ComplexScalar) -> Result<ComplexScalar> {
    if m == 0 {
        return Err(Error::Domain("the antiderivative rule needs m >= 1".into()));
    }
    if t.norm() >= a.value().re {
        return Err(Error::Domain(format!(
            "|t| < Re(a) required, got |t| = {} with Re(a) = {}",
            t.norm(),
            a.value().re
        )));
    }
    let closed = (g(m, a.shifted(t)?)?.value - g(m, a)?.value) / m as f64;
    if t.norm() == 0.0 {
        return Ok(closed);
    }
    let integrand = |s: ComplexScalar| -> ComplexScalar {
        match AParam::new(a.value() + s).and_then(|ash| g(m - 1, ash)) {
            Ok(v) => v.value,
            Err(_) => ComplexScalar::new(f64::NAN, f64::NAN),
        }
    };
    let quad = segment_quadrature(&integrand, t, 1e-10)?;
    let dev = (closed - quad.value).norm();
    if !dev.is_finite() || dev > 1e-8 * (1.0 + quad.value.norm()) {
        return Err(Error::NonConvergence(format!(
            "antiderivative rule self-check failed: closed {closed} vs quadrature {} (dev {dev:.3e})",
            quad.value
        )));
    }
    Ok(closed)
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::adaptive_finite;

    fn c(x: f64) -> ComplexScalar {
        ComplexScalar::new(x, 0.0)
    }

    fn ap(x: f64) -> AParam {
        AParam::real(x).unwrap()
    }

    fn quad_moment(t: f64, a: f64, m: u32) -> ComplexScalar {
        let f = |s: f64| {
            c(s.powi(m as i32)) * log_gamma(c(a + s)).unwrap().value
        };
        adaptive_finite(&f, 0.0, t, 1e-12).unwrap().value
    }

    #[test]
    fn zero_t() {
        let q = MomentQuery::new(c(0.0), ap(1.5), 3).unwrap();
        assert_eq!(log_gamma_moment(&q).unwrap(), c(0.0));
        for form in [M0Form::GForm, M0Form::ZetaForm, M0Form::BarnesForm] {
            let q0 = MomentQuery::new(c(0.0), ap(1.5), 0).unwrap();
            assert!(log_gamma_integral_m0(&q0, form).unwrap().norm() < 1e-12);
        }
    }

    #[test]
    fn domain_guards() {
        assert!(MomentQuery::new(c(2.0), ap(1.0), 0).is_err());
        assert!(MomentQuery::new(c(0.1), ap(1.0), 21).is_err());
        assert!(negative_polygamma(1, -0.5).is_err());
        assert!(negative_polygamma(0, 1.0).is_err());
        assert!(negative_polygamma(11, 1.0).is_err());
        assert!(g_integral_rule(0, ap(1.0), c(0.2)).is_err());
    }

    #[test]
    fn raabe_value() {
        // ∫₀¹ logΓ(1+s) ds = ln√(2π) − 1
        let v = log_gamma_moment_unchecked(c(1.0), ap(1.0), 0).unwrap();
        let expect = constants().log_sqrt_2pi - 1.0;
        assert!((v.re - expect).abs() < 1e-10, "{v} vs {expect}");
        assert!(v.im.abs() < 1e-12);
    }

    #[test]
    fn moment_vs_quadrature() {
        for (t, a, m) in [
            (0.5, 1.5, 0u32),
            (0.5, 1.5, 2),
            (0.25, 1.0, 1),
            (0.9, 2.5, 3),
        ] {
            let q = MomentQuery::new(c(t), ap(a), m).unwrap();
            let v = log_gamma_moment(&q).unwrap();
            let w = quad_moment(t, a, m);
            assert!(
                (v - w).norm() <= 1e-8 * (1.0 + w.norm()),
                "t={t} a={a} m={m}: {v} vs {w}"
            );
        }
    }

    #[test]
    fn three_forms_agree() {
        for (t, a) in [(0.5, 1.0), (0.5, 1.5), (0.25, 2.5)] {
            let q = MomentQuery::new(c(t), ap(a), 0).unwrap();
            let gv = log_gamma_integral_m0(&q, M0Form::GForm).unwrap();
            let zv = log_gamma_integral_m0(&q, M0Form::ZetaForm).unwrap();
            let bv = log_gamma_integral_m0(&q, M0Form::BarnesForm).unwrap();
            assert!((gv - zv).norm() < 1e-9 * (1.0 + zv.norm()), "t={t} a={a}: {gv} vs {zv}");
            assert!((bv - zv).norm() < 1e-9 * (1.0 + zv.norm()), "t={t} a={a}: {bv} vs {zv}");
        }
    }

    #[test]
    fn moment_derivative() {
        // d/dt ∫₀^t s^m logΓ(a+s) ds = t^m logΓ(a+t)
        let h = 1e-5;
        for (t, a, m) in [(0.4, 1.5, 0u32), (0.3, 2.5, 2)] {
            let up = log_gamma_moment(&MomentQuery::new(c(t + h), ap(a), m).unwrap()).unwrap();
            let dn = log_gamma_moment(&MomentQuery::new(c(t - h), ap(a), m).unwrap()).unwrap();
            let fd = (up - dn) / (2.0 * h);
            let rhs = c(t.powi(m as i32)) * log_gamma(c(a + t)).unwrap().value;
            assert!((fd - rhs).norm() < 1e-6, "t={t} a={a} m={m}: {fd} vs {rhs}");
        }
    }

    #[test]
    fn psi_moment_vs_quadrature() {
        for (t, a, p) in [(0.5, 1.0, 1u32), (0.25, 2.0, 2), (0.4, 1.5, 3)] {
            let v = psi_moment(c(t), ap(a), p).unwrap();
            let f = |s: f64| c(s.powi(p as i32 - 1)) * digamma(c(a - s)).unwrap().value;
            let w = adaptive_finite(&f, 0.0, t, 1e-12).unwrap().value;
            assert!(
                (v - w).norm() <= 1e-9 * (1.0 + w.norm()),
                "t={t} a={a} p={p}: {v} vs {w}"
            );
        }
    }

    #[test]
    fn negative_polygamma_base_cases() {
        // k = 1 is logΓ
        let v = negative_polygamma(1, 2.5).unwrap();
        assert!((v - log_gamma(c(2.5)).unwrap().value).norm() < 1e-14);
        // k = 2 at t = 1 is ∫₀¹ logΓ(s) ds = ln√(2π)
        let v = negative_polygamma(2, 1.0).unwrap();
        assert!((v.re - constants().log_sqrt_2pi).abs() < 1e-10, "{v}");
    }

    #[test]
    fn negative_polygamma_vs_quadrature() {
        // graded panels toward the logΓ(s) ~ -ln s endpoint
        let quad_k = |k: u32, t: f64| -> ComplexScalar {
            let n = k - 2;
            let f = |s: f64| {
                let w = (t - s).powi(n as i32);
                c(w) * (log_gamma(c(1.0 + s)).unwrap().value - s.ln())
            };
            let mut acc = ComplexScalar::new(0.0, 0.0);
            let mut lo = 1e-13;
            while lo < t {
                let hi = (lo * 2.0).min(t);
                acc += adaptive_finite(&f, lo, hi, 1e-13).unwrap().value;
                lo = hi;
            }
            acc / super::factorial(n)
        };
        for (k, t) in [(2u32, 0.75), (3, 1.0), (4, 1.5), (5, 0.5)] {
            let v = negative_polygamma(k, t).unwrap();
            let w = quad_k(k, t);
            assert!(
                (v - w).norm() <= 1e-8 * (1.0 + w.norm()),
                "k={k} t={t}: {v} vs {w}"
            );
        }
    }

    #[test]
    fn negative_polygamma_derivative() {
        // d/dt Ψ^(-2)(t) = logΓ(t)
        let h = 1e-5;
        let t = 1.25;
        let fd = (negative_polygamma(2, t + h).unwrap() - negative_polygamma(2, t - h).unwrap())
            / (2.0 * h);
        let rhs = log_gamma(c(t)).unwrap().value;
        assert!((fd - rhs).norm() < 1e-6, "{fd} vs {rhs}");
    }

    #[test]
    fn g_rule_matches_quadrature() {
        for (m, a, t) in [(1u32, 1.0, 0.5), (2, 2.0, 0.5), (3, 1.5, 0.25)] {
            let v = g_integral_rule(m, ap(a), c(t)).unwrap();
            let direct = (g(m, ap(a + t)).unwrap().value - g(m, ap(a)).unwrap().value) / m as f64;
            assert!((v - direct).norm() < 1e-14, "m={m}");
        }
        assert_eq!(g_integral_rule(1, ap(1.0), c(0.0)).unwrap(), c(0.0));
    }
}
