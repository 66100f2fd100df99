//! Closed-form evaluation of the zeta- and Lerch-coefficient series
//! families S(t,a,p), T(t,a,p) and the Lerch series, together with
//! their brute-force summation oracles.

use crate::lerch::{lerch_phi, lerch_phi_neg, lerch_phi_sderiv_neg, SDerivRoute};
use crate::special::{binomial_f, constants, digamma, g, hurwitz_zeta, psi_int};
use crate::types::{
    AParam, ComplexScalar, Error, EvalResult, LambdaParam, Method, Result, SeriesConfig,
};

/// Parameters of one series evaluation: S and T take (t, a, p); the
/// Lerch family adds λ.
#[derive(Debug, Clone, Copy)]
pub struct SeriesQuery {
    pub t: ComplexScalar,
    pub a: AParam,
    pub p: u32,
    pub lambda: Option<LambdaParam>,
}

impl SeriesQuery {
    pub fn new(t: ComplexScalar, a: AParam, p: u32) -> Result<Self> {
        let q = SeriesQuery { t, a, p, lambda: None };
        q.validate()?;
        Ok(q)
    }

    pub fn with_lambda(t: ComplexScalar, a: AParam, p: u32, lambda: LambdaParam) -> Result<Self> {
        let q = SeriesQuery { t, a, p, lambda: Some(lambda) };
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
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesFamily {
    S,
    T,
    Lerch,
}

/// S(t,a,p) = Σ_{n≥1} ζ(n+1,a) t^{n+p}/(n+p) in closed form.
///
/// p = 0 is the telescoped digamma difference; p ≥ 1 combines the
/// g-family values at a and a-t.
pub fn s_closed(q: &SeriesQuery) -> Result<ComplexScalar> {
    q.validate()?;
    let t = q.t;
    let a = q.a;
    let av = a.value();
    let psi_a = digamma(av)?.value;
    if q.p == 0 {
        // S(t,a,0) = ψ(a) - ψ(a-t)
        let shifted = AParam::new(av - t)?;
        return Ok(psi_a - digamma(shifted.value())?.value);
    }
    let p = q.p;
    let k = constants();
    let a_minus_t = a.shifted(-t)?;
    let mut acc = t.powu(p) / p as f64 * (psi_a + k.gamma);
    for j in 0..p {
        acc += g(j, a_minus_t)?.value * t.powu(p - 1 - j) * binomial_f(p - 1, j);
    }
    acc -= g(p - 1, a)?.value;
    Ok(acc)
}

/// T(t,a,p) = Σ_{n≥1} ζ(n+1,a) t^{n+p}/((n+1)…(n+p)) in closed form,
/// p ≥ 1. T(·,·,1) coincides with S(·,·,1).
pub fn t_closed(q: &SeriesQuery) -> Result<ComplexScalar> {
    q.validate()?;
    if q.p == 0 {
        return Err(Error::Domain(
            "T(t,a,p) is defined for p >= 1 (empty denominator product at p = 0)".into(),
        ));
    }
    let t = q.t;
    let a = q.a;
    let p = q.p;
    let k = constants();
    let psi_a = digamma(a.value())?.value;
    let fact_p = factorial(p);
    let fact_pm1 = factorial(p - 1);
    let mut acc = t.powu(p) / fact_p * (psi_a + k.gamma);
    for j in 0..p {
        let sign = if (j + 1) % 2 == 0 { 1.0 } else { -1.0 };
        acc += g(j, a)?.value * t.powu(p - j - 1) * (sign * binomial_f(p - 1, j) / fact_pm1);
    }
    // Final term from the p-fold antiderivative of e^{-tz}: the
    // exponent shift lands on g(p-1, a-t).
    let sign_p = if p.is_multiple_of(2) { 1.0 } else { -1.0 };
    acc -= g(p - 1, a.shifted(-t)?)?.value * (sign_p / fact_pm1);
    Ok(acc)
}

/// Σ_{n≥0} Φ(λ,n+1,a) t^{n+p}/(n+p) in closed form for p ≥ 1; for
/// p = 0 the series Σ_{n≥0} Φ(λ,n+1,a) tⁿ sums to Φ(λ,1,a-t).
pub fn lerch_series_closed(q: &SeriesQuery) -> Result<ComplexScalar> {
    q.validate()?;
    let lambda = q
        .lambda
        .ok_or_else(|| Error::Domain("the Lerch series needs a lambda parameter".into()))?;
    lambda.require_inside_disc()?;
    let t = q.t;
    let a = q.a;
    let a_minus_t = a.shifted(-t)?;
    if q.p == 0 {
        return Ok(lerch_phi(lambda, ComplexScalar::new(1.0, 0.0), a_minus_t)?.value);
    }
    let p = q.p;
    let mut acc = ComplexScalar::new(0.0, 0.0);
    for k in 0..p {
        let bracket = lerch_phi_sderiv_neg(lambda, k, a_minus_t, SDerivRoute::Prop2)?.value
            + lerch_phi_neg(lambda, k, a_minus_t)? * psi_int(k);
        acc += bracket * t.powu(p - 1 - k) * binomial_f(p - 1, k);
    }
    let last = lerch_phi_sderiv_neg(lambda, p - 1, a, SDerivRoute::Prop2)?.value
        + lerch_phi_neg(lambda, p - 1, a)? * psi_int(p - 1);
    Ok(acc - last)
}

/// Brute-force partial sums of the defining series, with a documented
/// geometric tail majorant: |ζ(n+1,a)| ≤ (Re a)^{-(n+1)}(1 + Re a / n),
/// so the terms are dominated by (|t|/Re a)ⁿ once n is moderate.
pub fn series_bruteforce(
    family: SeriesFamily,
    q: &SeriesQuery,
    cfg: &SeriesConfig,
) -> Result<EvalResult> {
    q.validate()?;
    cfg.validate()?;
    let t = q.t;
    let a = q.a;
    let av = a.value();
    let re_a = av.re;
    let tn = t.norm();
    if tn == 0.0 {
        return Ok(EvalResult::new(ComplexScalar::new(0.0, 0.0), 0.0, Method::Series));
    }
    let ratio = tn / re_a;
    let lambda = q.lambda;
    if family == SeriesFamily::Lerch {
        let lam = lambda.ok_or_else(|| Error::Domain("Lerch brute force needs lambda".into()))?;
        if lam.modulus() >= 1.0 - 1e-15 {
            return Err(Error::Domain(
                "brute force on the boundary |lambda| = 1 is limited to Re(s) > 0 termwise sums; \
                 the series families need |lambda| < 1"
                    .into(),
            ));
        }
    }
    let p = q.p;
    let mut sum = ComplexScalar::new(0.0, 0.0);
    let n_start = if family == SeriesFamily::Lerch { 0 } else { 1 };
    for n in n_start..cfg.max_terms {
        let nf = n as f64;
        let s = ComplexScalar::new(nf + 1.0, 0.0);
        let coeff = match family {
            SeriesFamily::S | SeriesFamily::T => hurwitz_zeta(s, a)?.value,
            SeriesFamily::Lerch => lerch_phi(lambda.unwrap(), s, a)?.value,
        };
        // p = 0 drops the denominator: the series is Σ ζ(n+1,a) tⁿ
        // (and Σ Φ(λ,n+1,a) tⁿ), not a divided family member.
        let term = match family {
            SeriesFamily::S => {
                if p == 0 {
                    coeff * t.powu(n as u32)
                } else {
                    coeff * t.powu(p + n as u32) / (nf + p as f64)
                }
            }
            SeriesFamily::T => {
                let mut denom = 1.0f64;
                for i in 1..=p {
                    denom *= nf + i as f64;
                }
                coeff * t.powu(p + n as u32) / denom
            }
            SeriesFamily::Lerch => {
                if p == 0 {
                    coeff * t.powu(n as u32)
                } else {
                    coeff * t.powu(p + n as u32) / (nf + p as f64)
                }
            }
        };
        sum += term;
        // Tail majorant: the coefficient bound above makes the terms
        // ≤ C (|t|/Re a)^n with C stabilizing quickly; the geometric
        // remainder bound closes the sum.
        if n >= n_start + 2 {
            let coeff_bound = re_a.powf(-(nf + 2.0)) * (1.0 + re_a / (nf + 1.0));
            let next_mag = match family {
                SeriesFamily::S => {
                    if p == 0 {
                        coeff_bound * tn.powi(n as i32 + 1)
                    } else {
                        coeff_bound * tn.powi(p as i32 + n as i32 + 1) / (nf + 1.0 + p as f64)
                    }
                }
                SeriesFamily::T => {
                    let mut denom = 1.0f64;
                    for i in 1..=p {
                        denom *= nf + 1.0 + i as f64;
                    }
                    coeff_bound * tn.powi(p as i32 + n as i32 + 1) / denom
                }
                SeriesFamily::Lerch => {
                    let scale = if p == 0 {
                        tn.powi(n as i32 + 1)
                    } else {
                        tn.powi(p as i32 + n as i32 + 1) / (nf + 1.0 + p as f64)
                    };
                    scale * coeff_bound / (1.0 - lambda.unwrap().modulus()).min(1.0)
                }
            };
            let tail = next_mag / (1.0 - ratio);
            if tail <= cfg.rel_tol * (1.0 + sum.norm()) {
                return Ok(EvalResult::new(sum, tail, Method::Series));
            }
        }
    }
    Err(Error::BudgetExhausted {
        budget: cfg.max_terms,
        value: sum,
        abs_err: f64::NAN,
    })
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::log_gamma;

    fn c(x: f64) -> ComplexScalar {
        ComplexScalar::new(x, 0.0)
    }

    fn ap(x: f64) -> AParam {
        AParam::real(x).unwrap()
    }

    fn cfg() -> SeriesConfig {
        SeriesConfig::default()
    }

    #[test]
    fn zero_t_vanishes() {
        for p in [0u32, 1, 2] {
            let q = SeriesQuery::new(c(0.0), ap(1.0), p).unwrap();
            if p >= 1 {
                assert!(s_closed(&q).unwrap().norm() < 1e-14);
                assert!(t_closed(&q).unwrap().norm() < 1e-14);
            }
            let b = series_bruteforce(SeriesFamily::S, &q, &cfg()).unwrap();
            assert_eq!(b.value, c(0.0));
        }
    }

    #[test]
    fn domain_guard() {
        assert!(SeriesQuery::new(c(1.2), ap(1.0), 1).is_err());
        let q = SeriesQuery { t: c(1.2), a: ap(1.0), p: 1, lambda: None };
        assert!(s_closed(&q).is_err());
    }

    #[test]
    fn p0_digamma_difference() {
        // S(0.5, 1, 0) = ψ(1) - ψ(0.5) = 2 ln 2
        let q = SeriesQuery::new(c(0.5), ap(1.0), 0).unwrap();
        let v = s_closed(&q).unwrap();
        assert!((v.re - 2.0 * 2.0f64.ln()).abs() < 1e-12, "{v}");
        let b = series_bruteforce(SeriesFamily::S, &q, &cfg()).unwrap().value;
        assert!((v - b).norm() < 1e-10);
    }

    #[test]
    fn p1_log_gamma_identity() {
        // S(t,a,1) = tψ(a) + logΓ(a-t) - logΓ(a)
        for (t, av) in [(0.5, 1.0), (0.25, 1.5), (0.9, 2.5)] {
            let q = SeriesQuery::new(c(t), ap(av), 1).unwrap();
            let v = s_closed(&q).unwrap();
            let direct = c(t) * crate::special::digamma(c(av)).unwrap().value
                + log_gamma(c(av - t)).unwrap().value
                - log_gamma(c(av)).unwrap().value;
            assert!((v - direct).norm() < 1e-12, "t={t} a={av}: {v} vs {direct}");
        }
    }

    #[test]
    fn s_closed_vs_bruteforce() {
        for p in [1u32, 2, 3, 4] {
            for (t, av) in [(0.1, 1.0), (0.25, 1.5), (0.45, 2.5)] {
                let q = SeriesQuery::new(c(t), ap(av), p).unwrap();
                let v = s_closed(&q).unwrap();
                let b = series_bruteforce(SeriesFamily::S, &q, &cfg()).unwrap().value;
                assert!(
                    (v - b).norm() <= 1e-9 * (1.0 + b.norm()),
                    "p={p} t={t} a={av}: {v} vs {b}"
                );
            }
        }
    }

    #[test]
    fn t_closed_vs_bruteforce() {
        for p in [1u32, 2, 3] {
            for (t, av) in [(0.1, 1.0), (0.25, 2.5), (0.45, 1.5)] {
                let q = SeriesQuery::new(c(t), ap(av), p).unwrap();
                let v = t_closed(&q).unwrap();
                let b = series_bruteforce(SeriesFamily::T, &q, &cfg()).unwrap().value;
                assert!(
                    (v - b).norm() <= 1e-9 * (1.0 + b.norm()),
                    "p={p} t={t} a={av}: {v} vs {b}"
                );
            }
        }
    }

    #[test]
    fn t1_equals_s1() {
        let q = SeriesQuery::new(c(0.3), ap(1.5), 1).unwrap();
        let s = s_closed(&q).unwrap();
        let t = t_closed(&q).unwrap();
        assert!((s - t).norm() < 1e-12);
    }

    #[test]
    fn t_rejects_p0() {
        let q = SeriesQuery::new(c(0.3), ap(1.5), 0).unwrap();
        assert!(t_closed(&q).is_err());
    }

    #[test]
    fn lerch_series_vs_bruteforce() {
        let lam = LambdaParam::real(0.5).unwrap();
        for p in [0u32, 1, 2, 3] {
            for (t, av) in [(0.25, 1.0), (0.1, 2.5)] {
                let q = SeriesQuery::with_lambda(c(t), ap(av), p, lam).unwrap();
                let v = lerch_series_closed(&q).unwrap();
                let b = series_bruteforce(SeriesFamily::Lerch, &q, &cfg()).unwrap().value;
                assert!(
                    (v - b).norm() <= 1e-9 * (1.0 + b.norm()),
                    "p={p} t={t} a={av}: {v} vs {b}"
                );
            }
        }
    }

    #[test]
    fn lerch_p0_is_maclaurin_of_phi_one() {
        let lam = LambdaParam::real(0.5).unwrap();
        let q = SeriesQuery::with_lambda(c(0.25), ap(1.0), 0, lam).unwrap();
        let v = lerch_series_closed(&q).unwrap();
        let direct = lerch_phi(lam, c(1.0), ap(0.75)).unwrap().value;
        assert!((v - direct).norm() < 1e-12);
    }

    #[test]
    fn complex_t_and_a() {
        let a = AParam::new(ComplexScalar::new(1.0, 0.5)).unwrap();
        let q = SeriesQuery {
            t: ComplexScalar::new(0.2, 0.1),
            a,
            p: 2,
            lambda: None,
        };
        q.validate().unwrap();
        let v = s_closed(&q).unwrap();
        let b = series_bruteforce(SeriesFamily::S, &q, &cfg()).unwrap().value;
        assert!((v - b).norm() <= 1e-9 * (1.0 + b.norm()), "{v} vs {b}");
    }

    #[test]
    fn differentiation_consistency() {
        // d/dt S(t,a,p) = t^{p-1} (ψ(a) - ψ(a-t))
        let h = 1e-5;
        for (p, t, av) in [(1u32, 0.3, 1.5), (2, 0.25, 2.5), (3, 0.2, 1.0)] {
            let up = s_closed(&SeriesQuery::new(c(t + h), ap(av), p).unwrap()).unwrap();
            let dn = s_closed(&SeriesQuery::new(c(t - h), ap(av), p).unwrap()).unwrap();
            let fd = (up - dn) / (2.0 * h);
            let psi_diff = crate::special::digamma(c(av)).unwrap().value
                - crate::special::digamma(c(av - t)).unwrap().value;
            let rhs = c(t).powu(p - 1) * psi_diff;
            assert!((fd - rhs).norm() < 1e-6, "p={p}: {fd} vs {rhs}");
        }
    }
}
