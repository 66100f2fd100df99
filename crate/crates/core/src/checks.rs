//! Identity check suites shared by the CLI `check` verb and the
//! acceptance test battery. Each suite exercises one identity family
//! on a fixed grid and reports the maximum relative deviation
//! |x - y| / (1 + |y|) against its tolerance.

use std::time::Instant;

use crate::hankel::{
    contour_integrate, hankel_barnes, hankel_gamma_family, hankel_lerch_family,
    hankel_zeta_family, GammaSelector, IntegrandKind, LerchSelector, ZetaSelector,
};
use crate::integrals::{log_gamma_integral_m0, log_gamma_moment, M0Form, MomentQuery};
use crate::lerch::{
    l_function, lerch_phi, lerch_phi_neg, lerch_phi_sderiv_neg, LerchMethod, SDerivRoute,
};
use crate::quad::{adaptive_finite, segment_quadrature};
use crate::series::{
    lerch_series_closed, s_closed, series_bruteforce, t_closed, SeriesFamily, SeriesQuery,
};
use crate::special::{
    barnes_log_g, constants, digamma, g, geometric_poly, hurwitz_zeta, hurwitz_zeta_sderiv,
    log_gamma, psi_int, zeta_neg_int,
};
use crate::types::{
    AParam, ComplexScalar, ContourSpec, Error, Result, SeriesConfig,
};

/// Outcome of one identity suite.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub id: &'static str,
    pub grid_size: usize,
    pub max_rel_dev: f64,
    pub tol: f64,
    pub pass: bool,
    pub wall_ms: f64,
}

impl CheckReport {
    fn from_run(id: &'static str, tol: f64, grid_size: usize, max_rel_dev: f64, wall_ms: f64) -> Self {
        CheckReport {
            id,
            grid_size,
            max_rel_dev,
            tol,
            pass: max_rel_dev <= tol,
            wall_ms,
        }
    }
}

type SuiteFn = fn() -> Result<(usize, f64)>;

struct Suite {
    id: &'static str,
    tol: f64,
    run: SuiteFn,
}

const SUITES: &[Suite] = &[
    Suite { id: "thm1", tol: 1e-9, run: check_thm1 },
    Suite { id: "eq4.3", tol: 1e-9, run: check_eq43 },
    Suite { id: "eq4.7", tol: 1e-12, run: check_eq47 },
    Suite { id: "thm2", tol: 1e-9, run: check_thm2 },
    Suite { id: "thm3", tol: 1e-9, run: check_thm3 },
    Suite { id: "thm4", tol: 1e-8, run: check_thm4 },
    Suite { id: "m0-forms", tol: 1e-9, run: check_m0_forms },
    Suite { id: "prop1", tol: 1e-10, run: check_prop1 },
    Suite { id: "prop2", tol: 1e-8, run: check_prop2 },
    Suite { id: "prop3", tol: 1e-8, run: check_prop3 },
    Suite { id: "lemma5", tol: 1e-8, run: check_lemma5 },
    Suite { id: "eq6.2", tol: 1e-10, run: check_eq62 },
    Suite { id: "eq2.9", tol: 1e-6, run: check_eq29 },
    Suite { id: "eq2.10", tol: 1e-8, run: check_eq210 },
    Suite { id: "shift", tol: 1e-10, run: check_shift },
    Suite { id: "barnes-diff", tol: 1e-9, run: check_barnes_diff },
    Suite { id: "eps-independence", tol: 1e-8, run: check_eps_independence },
    Suite { id: "hankel-corpus", tol: 1e-7, run: check_hankel_corpus },
    Suite { id: "i-vanish", tol: 1e-10, run: check_i_vanish },
    Suite { id: "spots", tol: 1e-10, run: check_spots },
];

/// All known identity suite ids, in execution order.
pub fn check_ids() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.id).collect()
}

/// Run one suite by id, or every suite for "all".
pub fn run_check(id: &str) -> Result<Vec<CheckReport>> {
    if id == "all" {
        return SUITES.iter().map(run_suite).collect();
    }
    match SUITES.iter().find(|s| s.id == id) {
        Some(s) => Ok(vec![run_suite(s)?]),
        None => Err(Error::Domain(format!(
            "unknown identity id '{id}'; known ids: {}, all",
            check_ids().join(", ")
        ))),
    }
}

fn run_suite(s: &Suite) -> Result<CheckReport> {
    let start = Instant::now();
    let (grid, dev) = (s.run)()?;
    let ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(CheckReport::from_run(s.id, s.tol, grid, dev, ms))
}

fn dev(x: ComplexScalar, y: ComplexScalar) -> f64 {
    (x - y).norm() / (1.0 + y.norm())
}

fn c(x: f64) -> ComplexScalar {
    ComplexScalar::new(x, 0.0)
}

fn a_grid() -> Vec<AParam> {
    vec![
        AParam::real(1.0).unwrap(),
        AParam::real(1.5).unwrap(),
        AParam::real(2.5).unwrap(),
        AParam::new(ComplexScalar::new(1.0, 0.5)).unwrap(),
    ]
}

fn a_grid_real() -> Vec<AParam> {
    vec![
        AParam::real(1.0).unwrap(),
        AParam::real(1.5).unwrap(),
        AParam::real(2.5).unwrap(),
    ]
}

fn t_grid(a: AParam) -> [f64; 3] {
    [0.1, 0.25, 0.45 * a.value().re]
}

fn lambda_grid() -> Vec<crate::types::LambdaParam> {
    use crate::types::LambdaParam;
    vec![
        LambdaParam::real(0.5).unwrap(),
        LambdaParam::real(-0.5).unwrap(),
        LambdaParam::real(0.3).unwrap(),
        LambdaParam::new(ComplexScalar::new(0.2, 0.2)).unwrap(),
    ]
}

fn check_thm1() -> Result<(usize, f64)> {
    let cfg = SeriesConfig::default();
    let mut n = 0;
    let mut worst = 0.0f64;
    for a in a_grid() {
        for t in t_grid(a) {
            for p in [1u32, 2, 3, 4] {
                let q = SeriesQuery::new(c(t), a, p)?;
                let x = s_closed(&q)?;
                let y = series_bruteforce(SeriesFamily::S, &q, &cfg)?.value;
                worst = worst.max(dev(x, y));
                n += 1;
            }
        }
    }
    Ok((n, worst))
}

fn check_eq43() -> Result<(usize, f64)> {
    let cfg = SeriesConfig::default();
    let mut n = 0;
    let mut worst = 0.0f64;
    for a in a_grid() {
        for t in t_grid(a) {
            for p in [0u32, 1] {
                let q = SeriesQuery::new(c(t), a, p)?;
                let x = s_closed(&q)?;
                let y = series_bruteforce(SeriesFamily::S, &q, &cfg)?.value;
                worst = worst.max(dev(x, y));
                n += 1;
            }
        }
    }
    Ok((n, worst))
}

fn check_eq47() -> Result<(usize, f64)> {
    // S(t,a,1) = tψ(a) + logΓ(a-t) - logΓ(a)
    let mut n = 0;
    let mut worst = 0.0f64;
    for a in a_grid() {
        let av = a.value();
        for t in t_grid(a) {
            let q = SeriesQuery::new(c(t), a, 1)?;
            let x = s_closed(&q)?;
            let y = c(t) * digamma(av)?.value + log_gamma(av - t)?.value - log_gamma(av)?.value;
            worst = worst.max(dev(x, y));
            n += 1;
        }
    }
    Ok((n, worst))
}

fn check_thm2() -> Result<(usize, f64)> {
    let cfg = SeriesConfig::default();
    let mut n = 0;
    let mut worst = 0.0f64;
    for a in a_grid() {
        for t in t_grid(a) {
            for p in [1u32, 2, 3] {
                let q = SeriesQuery::new(c(t), a, p)?;
                let x = t_closed(&q)?;
                let y = series_bruteforce(SeriesFamily::T, &q, &cfg)?.value;
                worst = worst.max(dev(x, y));
                n += 1;
            }
        }
    }
    Ok((n, worst))
}

fn check_thm3() -> Result<(usize, f64)> {
    let cfg = SeriesConfig::default();
    let mut n = 0;
    let mut worst = 0.0f64;
    for lam in lambda_grid() {
        for a in a_grid() {
            for t in t_grid(a) {
                for p in [0u32, 1, 2, 3] {
                    let q = SeriesQuery::with_lambda(c(t), a, p, lam)?;
                    let x = lerch_series_closed(&q)?;
                    let y = series_bruteforce(SeriesFamily::Lerch, &q, &cfg)?.value;
                    worst = worst.max(dev(x, y));
                    n += 1;
                }
            }
        }
    }
    Ok((n, worst))
}

fn check_thm4() -> Result<(usize, f64)> {
    let mut n = 0;
    let mut worst = 0.0f64;
    for a in a_grid_real() {
        let av = a.value();
        for t in t_grid(a) {
            for m in [0u32, 1, 2, 3] {
                let q = MomentQuery::new(c(t), a, m)?;
                let x = log_gamma_moment(&q)?;
                let f = |s: f64| c(s.powi(m as i32)) * log_gamma(av + s).unwrap().value;
                let y = adaptive_finite(&f, 0.0, t, 1e-12)?.value;
                worst = worst.max(dev(x, y));
                n += 1;
            }
        }
    }
    Ok((n, worst))
}

fn check_m0_forms() -> Result<(usize, f64)> {
    let mut n = 0;
    let mut worst = 0.0f64;
    for a in a_grid() {
        for t in t_grid(a) {
            let q = MomentQuery::new(c(t), a, 0)?;
            let gv = log_gamma_integral_m0(&q, M0Form::GForm)?;
            let zv = log_gamma_integral_m0(&q, M0Form::ZetaForm)?;
            let bv = log_gamma_integral_m0(&q, M0Form::BarnesForm)?;
            worst = worst.max(dev(gv, zv)).max(dev(bv, zv));
            n += 1;
        }
    }
    Ok((n, worst))
}

fn prop_lambdas() -> Vec<crate::types::LambdaParam> {
    use crate::types::LambdaParam;
    vec![
        LambdaParam::real(0.5).unwrap(),
        LambdaParam::real(-0.5).unwrap(),
        LambdaParam::real(0.3).unwrap(),
    ]
}

fn prop_as() -> Vec<AParam> {
    vec![AParam::real(1.0).unwrap(), AParam::real(2.5).unwrap()]
}

fn brute_phi_neg(lam: ComplexScalar, m: u32, a: ComplexScalar) -> ComplexScalar {
    let mut sum = ComplexScalar::new(0.0, 0.0);
    let mut pw = ComplexScalar::new(1.0, 0.0);
    for nn in 0..4000u32 {
        let term = pw * (a + nn as f64).powu(m);
        sum += term;
        if nn > 10 && term.norm() < 1e-18 * (1.0 + sum.norm()) {
            break;
        }
        pw *= lam;
    }
    sum
}

fn brute_phi_sderiv_neg(lam: ComplexScalar, m: u32, a: ComplexScalar) -> ComplexScalar {
    let mut sum = ComplexScalar::new(0.0, 0.0);
    let mut pw = ComplexScalar::new(1.0, 0.0);
    for nn in 0..4000u32 {
        let na = a + nn as f64;
        let term = pw * na.powu(m) * na.ln();
        sum += term;
        if nn > 10 && term.norm() < 1e-18 * (1.0 + sum.norm()) {
            break;
        }
        pw *= lam;
    }
    -sum
}

fn check_prop1() -> Result<(usize, f64)> {
    let mut n = 0;
    let mut worst = 0.0f64;
    for lam in prop_lambdas() {
        for a in prop_as() {
            for m in 0..=6u32 {
                let x = lerch_phi_neg(lam, m, a)?;
                let y = brute_phi_neg(lam.value(), m, a.value());
                worst = worst.max(dev(x, y));
                n += 1;
            }
        }
    }
    Ok((n, worst))
}

fn check_prop2() -> Result<(usize, f64)> {
    let mut n = 0;
    let mut worst = 0.0f64;
    for lam in prop_lambdas() {
        for a in prop_as() {
            for m in 0..=6u32 {
                let x = lerch_phi_sderiv_neg(lam, m, a, SDerivRoute::Prop2)?.value;
                let y = brute_phi_sderiv_neg(lam.value(), m, a.value());
                worst = worst.max(dev(x, y));
                n += 1;
            }
        }
    }
    Ok((n, worst))
}

fn check_prop3() -> Result<(usize, f64)> {
    let mut n = 0;
    let mut worst = 0.0f64;
    for lam in prop_lambdas() {
        for a in prop_as() {
            for m in 0..=3u32 {
                let x = lerch_phi_sderiv_neg(lam, m, a, SDerivRoute::Prop3)?.value;
                let y = lerch_phi_sderiv_neg(lam, m, a, SDerivRoute::Prop2)?.value;
                worst = worst.max(dev(x, y));
                n += 1;
            }
        }
    }
    Ok((n, worst))
}

fn check_lemma5() -> Result<(usize, f64)> {
    let mut n = 0;
    let mut worst = 0.0f64;
    for lam in prop_lambdas() {
        for a in prop_as() {
            let x = l_function(lam, a, LerchMethod::Series)?.value;
            let y = l_function(lam, a, LerchMethod::Integral)?.value;
            worst = worst.max(dev(x, y));
            n += 1;
        }
    }
    Ok((n, worst))
}

fn check_eq62() -> Result<(usize, f64)> {
    // Σ k^m λ^k = ω_m(λ/(1-λ)) / (1-λ)
    let one = ComplexScalar::new(1.0, 0.0);
    let mut n = 0;
    let mut worst = 0.0f64;
    for lam in lambda_grid() {
        let lv = lam.value();
        for m in 0..=6u32 {
            let mut sum = ComplexScalar::new(0.0, 0.0);
            let mut pw = one;
            for k in 0..4000u32 {
                let term = pw * (k as f64).powi(m as i32);
                sum += term;
                if k > 10 && term.norm() < 1e-18 * (1.0 + sum.norm()) {
                    break;
                }
                pw *= lv;
            }
            let closed = geometric_poly(m, lv / (one - lv))? / (one - lv);
            worst = worst.max(dev(sum, closed));
            n += 1;
        }
    }
    Ok((n, worst))
}

fn check_eq29() -> Result<(usize, f64)> {
    // d/da g(m,a) = m g(m-1,a), centered difference
    let h = 1e-5;
    let mut n = 0;
    let mut worst = 0.0f64;
    for a in a_grid_real() {
        let av = a.value().re;
        for m in [1u32, 2, 3] {
            let up = g(m, AParam::real(av + h)?)?.value;
            let dn = g(m, AParam::real(av - h)?)?.value;
            let fd = (up - dn) / (2.0 * h);
            let rhs = g(m - 1, a)?.value * m as f64;
            worst = worst.max(dev(fd, rhs));
            n += 1;
        }
    }
    Ok((n, worst))
}

fn check_eq210() -> Result<(usize, f64)> {
    let mut n = 0;
    let mut worst = 0.0f64;
    for (m, av, t) in [(1u32, 1.0, 0.5), (2, 2.0, 0.5), (2, 1.5, 0.25), (3, 2.5, 0.5)] {
        let a = AParam::real(av)?;
        let closed = (g(m, a.shifted(c(t))?)?.value - g(m, a)?.value) / m as f64;
        let f = |s: ComplexScalar| match AParam::new(a.value() + s).and_then(|x| g(m - 1, x)) {
            Ok(v) => v.value,
            Err(_) => ComplexScalar::new(f64::NAN, f64::NAN),
        };
        let q = segment_quadrature(&f, c(t), 1e-10)?.value;
        worst = worst.max(dev(closed, q));
        n += 1;
    }
    Ok((n, worst))
}

fn check_shift() -> Result<(usize, f64)> {
    let mut n = 0;
    let mut worst = 0.0f64;
    let s_grid = [
        c(-1.5),
        c(-0.5),
        c(0.5),
        c(2.5),
        ComplexScalar::new(0.5, 1.0),
    ];
    for a in a_grid() {
        let av = a.value();
        let a1 = a.shifted(c(1.0))?;
        for s in s_grid {
            let lhs = hurwitz_zeta(s, a)?.value;
            let rhs = hurwitz_zeta(s, a1)?.value + av.powc(-s);
            worst = worst.max(dev(lhs, rhs));
            n += 1;
        }
        for lam in prop_lambdas() {
            for s in [c(-0.5), c(1.5)] {
                let lhs = lerch_phi(lam, s, a)?.value;
                let rhs = lam.value() * lerch_phi(lam, s, a1)?.value + av.powc(-s);
                worst = worst.max(dev(lhs, rhs));
                n += 1;
            }
        }
    }
    Ok((n, worst))
}

fn check_barnes_diff() -> Result<(usize, f64)> {
    // log G(a+1) = log Γ(a) + log G(a)
    let mut n = 0;
    let mut worst = 0.0f64;
    for a in a_grid() {
        let av = a.value();
        let lhs = barnes_log_g(a.shifted(c(1.0))?)?.value;
        let rhs = log_gamma(av)?.value + barnes_log_g(a)?.value;
        worst = worst.max(dev(lhs, rhs));
        n += 1;
    }
    Ok((n, worst))
}

fn check_eps_independence() -> Result<(usize, f64)> {
    use crate::types::LambdaParam;
    let kinds = [
        IntegrandKind::GFamily { n: 1, a: AParam::real(1.5).unwrap() },
        IntegrandKind::IOfS { s: c(-0.5), a: AParam::real(1.0).unwrap() },
        IntegrandKind::LogGammaRep { a: AParam::real(2.5).unwrap() },
        IntegrandKind::PhiDeriv {
            lambda: LambdaParam::real(0.5).unwrap(),
            n: 1,
            a: AParam::real(1.0).unwrap(),
        },
    ];
    let mut n = 0;
    let mut worst = 0.0f64;
    for kind in kinds {
        let base = contour_integrate(kind, &ContourSpec::with_epsilon(1.0))?.value;
        for eps in [0.5, 3.0] {
            let v = contour_integrate(kind, &ContourSpec::with_epsilon(eps))?.value;
            worst = worst.max(dev(v, base));
            n += 1;
        }
    }
    Ok((n, worst))
}

fn check_hankel_corpus() -> Result<(usize, f64)> {
    use crate::types::LambdaParam;
    let spec = ContourSpec::default();
    let mut n = 0;
    let mut worst = 0.0f64;
    let record = |x: ComplexScalar, y: ComplexScalar, n: &mut usize, worst: &mut f64| {
        *worst = (*worst).max(dev(x, y));
        *n += 1;
    };
    let k = constants();

    for a in a_grid_real() {
        let av = a.value();
        // continued zeta representation at non-integer s
        for s in [c(-1.5), c(-0.5), c(0.5)] {
            let x = hankel_zeta_family(ZetaSelector::Cont, s, a, &spec)?.value;
            let y = hurwitz_zeta(s, a)?.value;
            record(x, y, &mut n, &mut worst);
        }
        // negative integer arguments via Bernoulli polynomials
        for m in 0..=3u32 {
            let x = hankel_zeta_family(ZetaSelector::Neg, c(m as f64), a, &spec)?.value;
            let y = zeta_neg_int(m, a)?;
            record(x, y, &mut n, &mut worst);
        }
        // positive integer arguments ζ(n+1, a)
        for m in [1u32, 2] {
            let x = hankel_zeta_family(ZetaSelector::Pos, c(m as f64), a, &spec)?.value;
            let y = hurwitz_zeta(c(m as f64 + 1.0), a)?.value;
            record(x, y, &mut n, &mut worst);
        }
        // the g family
        for m in 0..=2u32 {
            let x = hankel_zeta_family(ZetaSelector::G, c(m as f64), a, &spec)?.value;
            let y = g(m, a)?.value;
            record(x, y, &mut n, &mut worst);
        }
        // ψ(a) + γ
        let x = contour_integrate(IntegrandKind::PsiPlusGamma { a }, &spec)?.value;
        let y = digamma(av)?.value + k.gamma;
        record(x, y, &mut n, &mut worst);
        // logΓ
        let x = hankel_gamma_family(GammaSelector::LogGamma, av, &spec)?.value;
        let y = log_gamma(av)?.value;
        record(x, y, &mut n, &mut worst);
        // ζ'(-1, a)
        let x = hankel_zeta_family(ZetaSelector::ZPrimeNeg1, c(0.0), a, &spec)?.value;
        let y = hurwitz_zeta_sderiv(c(-1.0), a)?.value;
        record(x, y, &mut n, &mut worst);
        // log G
        let x = hankel_barnes(a, &spec)?.value;
        let y = barnes_log_g(a)?.value;
        record(x, y, &mut n, &mut worst);
    }

    // digamma and reciprocal-Gamma representations
    for s in [c(1.0), c(2.5), ComplexScalar::new(1.0, 0.5)] {
        let y = digamma(s)?.value;
        let x = hankel_gamma_family(GammaSelector::PsiCombined, s, &spec)?.value;
        record(x, y, &mut n, &mut worst);
        let x = hankel_gamma_family(GammaSelector::PsiDirect, s, &spec)?.value;
        record(x, y, &mut n, &mut worst);
        let x = hankel_gamma_family(GammaSelector::InvGamma, s, &spec)?.value;
        let y = ComplexScalar::new(1.0, 0.0) / crate::special::gamma_fn(s)?;
        record(x, y, &mut n, &mut worst);
    }
    // Euler's constant
    let x = hankel_gamma_family(GammaSelector::GammaConst, c(0.0), &spec)?.value;
    record(x, c(k.gamma), &mut n, &mut worst);

    // Lerch representations
    let lam_pair = [LambdaParam::real(0.5).unwrap(), LambdaParam::real(-0.5).unwrap()];
    for lam in lam_pair {
        for a in [AParam::real(1.0).unwrap(), AParam::real(1.5).unwrap()] {
            for s in [c(-0.5), c(0.5)] {
                let x = hankel_lerch_family(LerchSelector::PhiCont, lam, s, a, &spec)?.value;
                let y = lerch_phi(lam, s, a)?.value;
                record(x, y, &mut n, &mut worst);
            }
            let x = hankel_lerch_family(LerchSelector::PhiOne, lam, c(0.0), a, &spec)?.value;
            let y = lerch_phi(lam, c(1.0), a)?.value;
            record(x, y, &mut n, &mut worst);
            for m in 0..=2u32 {
                let x =
                    hankel_lerch_family(LerchSelector::PhiDeriv, lam, c(m as f64), a, &spec)?.value;
                let y = lerch_phi_sderiv_neg(lam, m, a, SDerivRoute::Prop2)?.value
                    + lerch_phi_neg(lam, m, a)? * psi_int(m);
                record(x, y, &mut n, &mut worst);
            }
        }
    }
    Ok((n, worst))
}

fn check_i_vanish() -> Result<(usize, f64)> {
    let spec = ContourSpec::default();
    let mut n = 0;
    let mut worst = 0.0f64;
    for a in a_grid_real() {
        for m in [2u32, 3, 4, 5] {
            let v = contour_integrate(IntegrandKind::IOfS { s: c(m as f64), a }, &spec)?.value;
            worst = worst.max(v.norm());
            n += 1;
        }
    }
    Ok((n, worst))
}

fn check_spots() -> Result<(usize, f64)> {
    let k = constants();
    let a1 = AParam::real(1.0)?;
    let mut n = 0;
    let mut worst = 0.0f64;
    let record = |x: ComplexScalar, y: ComplexScalar, n: &mut usize, worst: &mut f64| {
        *worst = (*worst).max(dev(x, y));
        *n += 1;
    };
    record(hurwitz_zeta(c(-1.0), a1)?.value, c(-1.0 / 12.0), &mut n, &mut worst);
    for a in a_grid() {
        let av = a.value();
        record(
            hurwitz_zeta(c(0.0), a)?.value,
            ComplexScalar::new(0.5, 0.0) - av,
            &mut n,
            &mut worst,
        );
    }
    record(hurwitz_zeta_sderiv(c(0.0), a1)?.value, c(-k.log_sqrt_2pi), &mut n, &mut worst);
    record(digamma(c(1.0))?.value, c(-k.gamma), &mut n, &mut worst);
    record(digamma(c(2.0))?.value, c(1.0 - k.gamma), &mut n, &mut worst);
    record(barnes_log_g(a1)?.value, c(0.0), &mut n, &mut worst);
    record(barnes_log_g(AParam::real(2.0)?)?.value, c(0.0), &mut n, &mut worst);
    Ok((n, worst))
}
