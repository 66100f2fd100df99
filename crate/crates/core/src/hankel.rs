//! Direct quadrature over the keyhole contour L = L₋ ∪ L_ε ∪ L₊
//! wrapping the negative real axis: lower ray at arg z = -π traced left
//! to right, counterclockwise circle of radius ε, upper ray at arg z =
//! +π traced right to left. Log z is fixed per piece (ln x ∓ iπ on the
//! rays, ln ε + iθ on the circle) so the branch never flips mid-panel.

use num_complex::Complex64;

use crate::quad::rule;
use crate::special::{barnes_polynomial, constants, gamma_fn};
use crate::types::{
    AParam, ComplexScalar, ContourSpec, Error, EvalResult, LambdaParam, Method, Result,
};

/// One Hankel integrand from the paper's representation corpus.
#[derive(Debug, Clone, Copy)]
pub enum IntegrandKind {
    /// z^{s-1} e^{az} / (1 - e^z)
    IOfS { s: ComplexScalar, a: AParam },
    /// Same integrand as `IOfS`; the Γ(1-s) prefactor makes ζ(s,a).
    ZetaCont { s: ComplexScalar, a: AParam },
    /// z^{-(n+1)} e^{az} / (1 - e^z); prefactor n! makes ζ(-n,a).
    ZetaNeg { n: u32, a: AParam },
    /// z^n Log z · e^{az} / (1 - e^z); prefactor (-1)^{n+1}/n!.
    ZetaPos { n: u32, a: AParam },
    /// z^{-n-1} e^{az} Log z / (1 - e^z); prefactor n! makes g(n,a).
    GFamily { n: u32, a: AParam },
    /// e^{az} Log z / (1 - e^z) = ψ(a) + γ directly.
    PsiPlusGamma { a: AParam },
    /// (e^z/z + e^{sz}/(1-e^z)) Log z = ψ(s) directly.
    PsiCombined { s: ComplexScalar },
    /// z^{-s} e^z Log z; prefactor Γ(s) makes ψ(s).
    PsiDirect { s: ComplexScalar },
    /// z^{-s} e^z = 1/Γ(s) directly.
    InvGamma { s: ComplexScalar },
    /// e^z Log z / z; γ is minus this integral.
    GammaConst,
    /// z^{-1} e^{az} Log z / (1 - e^z); the additive polynomial part of
    /// logΓ(a) lives in the family wrapper.
    LogGammaRep { a: AParam },
    /// z^{s-1} e^{az} / (1 - λ e^z); prefactor Γ(1-s) makes Φ(λ,s,a).
    PhiCont {
        lambda: LambdaParam,
        s: ComplexScalar,
        a: AParam,
    },
    /// e^{az} Log z / (1 - λ e^z); Φ(λ,1,a) is minus this integral.
    PhiOne { lambda: LambdaParam, a: AParam },
    /// z^{-n-1} e^{az} Log z / (1 - λ e^z); prefactor n!.
    PhiDeriv {
        lambda: LambdaParam,
        n: u32,
        a: AParam,
    },
    /// z^{-2} e^{az} Log z / (1 - e^z); with its polynomial this is ζ'(-1,a).
    ZetaPrimeNeg1 { a: AParam },
    /// [(a-1)z^{-1} - z^{-2}] e^{az} Log z / (1 - e^z); with p(a) it is log G(a).
    LogG { a: AParam },
}

impl IntegrandKind {
    fn lambda(&self) -> Option<ComplexScalar> {
        match self {
            IntegrandKind::PhiCont { lambda, .. }
            | IntegrandKind::PhiOne { lambda, .. }
            | IntegrandKind::PhiDeriv { lambda, .. } => Some(lambda.value()),
            _ => None,
        }
    }

    /// f(z) with the caller-supplied branch of Log z.
    fn eval(&self, z: ComplexScalar, logz: ComplexScalar) -> ComplexScalar {
        let one = Complex64::new(1.0, 0.0);
        let zpow = |alpha: ComplexScalar| (alpha * logz).exp();
        match *self {
            IntegrandKind::IOfS { s, a } | IntegrandKind::ZetaCont { s, a } => {
                zpow(s - 1.0) * (a.value() * z).exp() / (one - z.exp())
            }
            IntegrandKind::ZetaNeg { n, a } => {
                zpow(Complex64::new(-(n as f64) - 1.0, 0.0)) * (a.value() * z).exp()
                    / (one - z.exp())
            }
            IntegrandKind::ZetaPos { n, a } => {
                zpow(Complex64::new(n as f64, 0.0)) * logz * (a.value() * z).exp()
                    / (one - z.exp())
            }
            IntegrandKind::GFamily { n, a } => {
                zpow(Complex64::new(-(n as f64) - 1.0, 0.0)) * logz * (a.value() * z).exp()
                    / (one - z.exp())
            }
            IntegrandKind::PsiPlusGamma { a } => {
                (a.value() * z).exp() * logz / (one - z.exp())
            }
            IntegrandKind::PsiCombined { s } => {
                (z.exp() / z + (s * z).exp() / (one - z.exp())) * logz
            }
            IntegrandKind::PsiDirect { s } => zpow(-s) * z.exp() * logz,
            IntegrandKind::InvGamma { s } => zpow(-s) * z.exp(),
            IntegrandKind::GammaConst => z.exp() * logz / z,
            IntegrandKind::LogGammaRep { a } => {
                zpow(Complex64::new(-1.0, 0.0)) * (a.value() * z).exp() * logz / (one - z.exp())
            }
            IntegrandKind::PhiCont { lambda, s, a } => {
                zpow(s - 1.0) * (a.value() * z).exp() / (one - lambda.value() * z.exp())
            }
            IntegrandKind::PhiOne { lambda, a } => {
                (a.value() * z).exp() * logz / (one - lambda.value() * z.exp())
            }
            IntegrandKind::PhiDeriv { lambda, n, a } => {
                zpow(Complex64::new(-(n as f64) - 1.0, 0.0)) * logz * (a.value() * z).exp()
                    / (one - lambda.value() * z.exp())
            }
            IntegrandKind::ZetaPrimeNeg1 { a } => {
                zpow(Complex64::new(-2.0, 0.0)) * (a.value() * z).exp() * logz / (one - z.exp())
            }
            IntegrandKind::LogG { a } => {
                let av = a.value();
                ((av - 1.0) * zpow(Complex64::new(-1.0, 0.0))
                    - zpow(Complex64::new(-2.0, 0.0)))
                    * (av * z).exp()
                    * logz
                    / (one - z.exp())
            }
        }
    }

    fn re_a(&self) -> f64 {
        match self {
            IntegrandKind::IOfS { a, .. }
            | IntegrandKind::ZetaCont { a, .. }
            | IntegrandKind::ZetaNeg { a, .. }
            | IntegrandKind::ZetaPos { a, .. }
            | IntegrandKind::GFamily { a, .. }
            | IntegrandKind::PsiPlusGamma { a }
            | IntegrandKind::LogGammaRep { a }
            | IntegrandKind::PhiCont { a, .. }
            | IntegrandKind::PhiOne { a, .. }
            | IntegrandKind::PhiDeriv { a, .. }
            | IntegrandKind::ZetaPrimeNeg1 { a }
            | IntegrandKind::LogG { a } => a.value().re,
            IntegrandKind::PsiCombined { s } | IntegrandKind::PsiDirect { s } => s.re,
            IntegrandKind::InvGamma { .. } | IntegrandKind::GammaConst => 1.0,
        }
    }
}

/// Poles of 1/(1 - λe^z) sit at -Log λ + 2πik. The circle radius is
/// pulled in automatically when one falls within 0.5 of it, and the
/// quadrature refuses to run if the contour passes within 1e-3 of a pole.
fn safe_epsilon(kind: &IntegrandKind, requested: f64) -> Result<f64> {
    let Some(lam) = kind.lambda() else {
        return Ok(requested);
    };
    if lam.norm() == 0.0 {
        return Ok(requested);
    }
    let base = -lam.ln();
    let mut eps = requested;
    let two_pi = 2.0 * std::f64::consts::PI;
    for k in -3..=3 {
        let pole = base + Complex64::new(0.0, two_pi * k as f64);
        let d = pole.norm();
        if d - eps < 0.5 {
            eps = 0.5 * d;
        }
        // distance from the rays (the negative real axis beyond -ε)
        if pole.re < 0.0 && pole.im.abs() < 1e-3 {
            return Err(Error::Pole(format!(
                "denominator pole at {pole} sits on the contour rays"
            )));
        }
        if d < 1e-3 {
            return Err(Error::Pole(format!("denominator pole at {pole} near origin")));
        }
    }
    Ok(eps)
}

/// Raw contour pass at a given refinement level. Returns the circle and
/// ray contributions separately, each already divided by 2πi.
fn contour_pass(
    kind: &IntegrandKind,
    spec: &ContourSpec,
    eps: f64,
    refine: bool,
) -> Result<(ComplexScalar, ComplexScalar)> {
    let pi = std::f64::consts::PI;
    let scale = if refine { 2usize } else { 1 };
    let n_ray = spec.n_ray.max(4);
    let (nodes, weights) = rule(n_ray);

    // Circle: z = ε e^{iθ}, θ ∈ [-π, π], dz = iε e^{iθ} dθ.
    let n_panels = (spec.n_circle / 16).max(1) * scale;
    let mut circle = Complex64::new(0.0, 0.0);
    let width = 2.0 * pi / n_panels as f64;
    let (cn, cw) = rule(16);
    for p in 0..n_panels {
        let lo = -pi + width * p as f64;
        let mid = lo + 0.5 * width;
        let half = 0.5 * width;
        for (x, w) in cn.iter().zip(cw.iter()) {
            let theta = mid + half * x;
            let z = Complex64::from_polar(eps, theta);
            let logz = Complex64::new(eps.ln(), theta);
            circle += kind.eval(z, logz) * Complex64::new(0.0, 1.0) * z * (w * half);
        }
    }

    // Rays: combined lower-minus-upper contribution
    // ∫_ε^R [f(-x, ln x - iπ) - f(-x, ln x + iπ)] dx
    // over dyadic panels graded toward x = ε.
    let cutoff = spec.ray_cutoff.max(40.0 / kind.re_a().max(0.025));
    let mut rays = Complex64::new(0.0, 0.0);
    let mut lo = eps;
    let mut done = false;
    for _ in 0..220 {
        let hi = 2.0 * lo;
        let sub = scale;
        let mut panel = Complex64::new(0.0, 0.0);
        for j in 0..sub {
            let a = lo + (hi - lo) * j as f64 / sub as f64;
            let b = lo + (hi - lo) * (j + 1) as f64 / sub as f64;
            let mid = 0.5 * (a + b);
            let half = 0.5 * (b - a);
            for (x, w) in nodes.iter().zip(weights.iter()) {
                let xv = mid + half * x;
                let z = Complex64::new(-xv, 0.0);
                let lower = kind.eval(z, Complex64::new(xv.ln(), -pi));
                let upper = kind.eval(z, Complex64::new(xv.ln(), pi));
                panel += (lower - upper) * (w * half);
            }
        }
        rays += panel;
        lo = hi;
        if lo >= cutoff && panel.norm() < spec.tail_tol * (1.0 + rays.norm()) {
            done = true;
            break;
        }
    }
    if !done {
        return Err(Error::NonConvergence(
            "ray integrand failed to decay below tail_tol".into(),
        ));
    }
    let two_pi_i = Complex64::new(0.0, 2.0 * pi);
    Ok((circle / two_pi_i, rays / two_pi_i))
}

/// (1/2πi) ∮_L f(z) dz with a node-doubling error estimate.
pub fn contour_integrate(kind: IntegrandKind, spec: &ContourSpec) -> Result<EvalResult> {
    spec.validate()?;
    if kind.re_a() <= 0.0 {
        return Err(Error::Domain("contour integrand requires Re(a) > 0".into()));
    }
    let eps = safe_epsilon(&kind, spec.epsilon)?;
    let (c1, r1) = contour_pass(&kind, spec, eps, false)?;
    let (c2, r2) = contour_pass(&kind, spec, eps, true)?;
    let coarse = c1 + r1;
    let fine = c2 + r2;
    let abs_err = (fine - coarse).norm();
    if abs_err > 1e-6 * (1.0 + fine.norm()) {
        return Err(Error::NonConvergence(format!(
            "node doubling left error estimate {abs_err:e}"
        )));
    }
    Ok(EvalResult::new(fine, abs_err, Method::Contour))
}

/// Circle and ray pieces separately (refined pass), for the
/// branch-cancellation diagnostics.
pub fn contour_pieces(kind: IntegrandKind, spec: &ContourSpec) -> Result<(ComplexScalar, ComplexScalar)> {
    spec.validate()?;
    let eps = safe_epsilon(&kind, spec.epsilon)?;
    contour_pass(&kind, spec, eps, true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZetaSelector {
    Cont,
    Neg,
    Pos,
    G,
    ZPrimeNeg1,
}

/// Hankel representations of the zeta family, with their prefactors.
pub fn hankel_zeta_family(
    selector: ZetaSelector,
    s_or_n: ComplexScalar,
    a: AParam,
    spec: &ContourSpec,
) -> Result<EvalResult> {
    match selector {
        ZetaSelector::Cont => {
            let s = s_or_n;
            if s.im == 0.0 && s.re >= 1.0 && s.re.fract() == 0.0 {
                return Err(Error::Domain(
                    "the Γ(1-s) form represents ζ(s,a) only for s ≠ 1, 2, …".into(),
                ));
            }
            let base = contour_integrate(IntegrandKind::IOfS { s, a }, spec)?;
            let pref = gamma_fn(Complex64::new(1.0, 0.0) - s)?;
            Ok(EvalResult::new(
                base.value * pref,
                base.abs_err * pref.norm(),
                Method::Contour,
            ))
        }
        ZetaSelector::Neg => {
            let n = integer_order(s_or_n, 0)?;
            let base = contour_integrate(IntegrandKind::ZetaNeg { n, a }, spec)?;
            let pref = factorial(n);
            Ok(EvalResult::new(base.value * pref, base.abs_err * pref, Method::Contour))
        }
        ZetaSelector::Pos => {
            let n = integer_order(s_or_n, 1)?;
            let base = contour_integrate(IntegrandKind::ZetaPos { n, a }, spec)?;
            let pref = if n % 2 == 0 { -1.0 } else { 1.0 } / factorial(n);
            Ok(EvalResult::new(
                base.value * pref,
                base.abs_err * pref.abs(),
                Method::Contour,
            ))
        }
        ZetaSelector::G => {
            let n = integer_order(s_or_n, 0)?;
            let base = contour_integrate(IntegrandKind::GFamily { n, a }, spec)?;
            let pref = factorial(n);
            Ok(EvalResult::new(base.value * pref, base.abs_err * pref, Method::Contour))
        }
        ZetaSelector::ZPrimeNeg1 => {
            let base = contour_integrate(IntegrandKind::ZetaPrimeNeg1 { a }, spec)?;
            let k = constants();
            let av = a.value();
            let b2 = av * av - av + 1.0 / 6.0;
            let poly = b2 * (0.5 * (1.0 - k.gamma));
            Ok(EvalResult::new(base.value + poly, base.abs_err, Method::Contour))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaSelector {
    PsiCombined,
    PsiDirect,
    InvGamma,
    GammaConst,
    LogGamma,
}

/// Hankel representations of ψ, 1/Γ, γ and logΓ.
pub fn hankel_gamma_family(
    selector: GammaSelector,
    arg: ComplexScalar,
    spec: &ContourSpec,
) -> Result<EvalResult> {
    match selector {
        GammaSelector::PsiCombined => {
            require_right_half(arg)?;
            contour_integrate(IntegrandKind::PsiCombined { s: arg }, spec)
        }
        GammaSelector::PsiDirect => {
            require_right_half(arg)?;
            let base = contour_integrate(IntegrandKind::PsiDirect { s: arg }, spec)?;
            let pref = gamma_fn(arg)?;
            Ok(EvalResult::new(
                base.value * pref,
                base.abs_err * pref.norm(),
                Method::Contour,
            ))
        }
        GammaSelector::InvGamma => contour_integrate(IntegrandKind::InvGamma { s: arg }, spec),
        GammaSelector::GammaConst => {
            let base = contour_integrate(IntegrandKind::GammaConst, spec)?;
            Ok(EvalResult::new(-base.value, base.abs_err, Method::Contour))
        }
        GammaSelector::LogGamma => {
            let a = AParam::new(arg)?;
            let base = contour_integrate(IntegrandKind::LogGammaRep { a }, spec)?;
            let k = constants();
            let poly = k.log_sqrt_2pi - k.gamma * (arg - 0.5);
            Ok(EvalResult::new(base.value + poly, base.abs_err, Method::Contour))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LerchSelector {
    PhiCont,
    PhiOne,
    PhiDeriv,
}

/// Hankel representations of the Lerch transcendent family.
pub fn hankel_lerch_family(
    selector: LerchSelector,
    lambda: LambdaParam,
    s_or_n: ComplexScalar,
    a: AParam,
    spec: &ContourSpec,
) -> Result<EvalResult> {
    match selector {
        LerchSelector::PhiCont => {
            let s = s_or_n;
            if s.im == 0.0 && s.re >= 1.0 && s.re.fract() == 0.0 {
                return Err(Error::Domain(
                    "the Γ(1-s) form needs s ≠ 1, 2, … (use phi_one at s = 1)".into(),
                ));
            }
            let base = contour_integrate(IntegrandKind::PhiCont { lambda, s, a }, spec)?;
            let pref = gamma_fn(Complex64::new(1.0, 0.0) - s)?;
            Ok(EvalResult::new(
                base.value * pref,
                base.abs_err * pref.norm(),
                Method::Contour,
            ))
        }
        LerchSelector::PhiOne => {
            let base = contour_integrate(IntegrandKind::PhiOne { lambda, a }, spec)?;
            Ok(EvalResult::new(-base.value, base.abs_err, Method::Contour))
        }
        LerchSelector::PhiDeriv => {
            let n = integer_order(s_or_n, 0)?;
            let base = contour_integrate(IntegrandKind::PhiDeriv { lambda, n, a }, spec)?;
            let pref = factorial(n);
            Ok(EvalResult::new(base.value * pref, base.abs_err * pref, Method::Contour))
        }
    }
}

/// log G(a) = p(a) + (1/2πi)∮ [(a-1)z^{-1} - z^{-2}] e^{az} Log z/(1-e^z) dz.
pub fn hankel_barnes(a: AParam, spec: &ContourSpec) -> Result<EvalResult> {
    let base = contour_integrate(IntegrandKind::LogG { a }, spec)?;
    Ok(EvalResult::new(
        base.value + barnes_polynomial(a.value()),
        base.abs_err,
        Method::Contour,
    ))
}

fn require_right_half(s: ComplexScalar) -> Result<()> {
    if s.re <= 0.0 {
        return Err(Error::Domain("Re(argument) > 0 required".into()));
    }
    Ok(())
}

fn integer_order(v: ComplexScalar, least: u32) -> Result<u32> {
    if v.im != 0.0 || v.re.fract() != 0.0 || v.re < least as f64 {
        return Err(Error::Domain(format!(
            "integer order >= {least} required, got {v}"
        )));
    }
    Ok(v.re as u32)
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lerch::{l_function, lerch_phi_neg, lerch_phi_sderiv_neg, LerchMethod, SDerivRoute};
    use crate::special::{
        barnes_log_g, digamma, g, hurwitz_zeta, hurwitz_zeta_sderiv, psi_int,
    };

    fn c(x: f64) -> ComplexScalar {
        Complex64::new(x, 0.0)
    }

    fn ap(x: f64) -> AParam {
        AParam::real(x).unwrap()
    }

    fn spec() -> ContourSpec {
        ContourSpec::default()
    }

    #[test]
    fn i_of_m_vanishes() {
        for m in [2.0, 3.0, 4.0, 5.0] {
            let v = contour_integrate(
                IntegrandKind::IOfS { s: c(m), a: ap(1.0) },
                &spec(),
            )
            .unwrap();
            assert!(v.value.norm() < 1e-10, "m={m}: {}", v.value.norm());
        }
    }

    #[test]
    fn zeta_neg_one() {
        let v = hankel_zeta_family(ZetaSelector::Neg, c(1.0), ap(1.0), &spec()).unwrap();
        assert!((v.value.re + 1.0 / 12.0).abs() < 1e-10, "{}", v.value);
    }

    #[test]
    fn zeta_pos_apery() {
        let v = hankel_zeta_family(ZetaSelector::Pos, c(2.0), ap(1.0), &spec()).unwrap();
        assert!((v.value.re - 1.2020569031595942).abs() < 1e-9, "{}", v.value);
    }

    #[test]
    fn zeta_cont_matches_euler_maclaurin() {
        let v = hankel_zeta_family(ZetaSelector::Cont, c(-2.5), ap(1.5), &spec()).unwrap();
        let w = hurwitz_zeta(c(-2.5), ap(1.5)).unwrap().value;
        assert!((v.value - w).norm() < 1e-8, "{} vs {}", v.value, w);
    }

    #[test]
    fn psi_plus_gamma_at_one_vanishes() {
        let v = contour_integrate(IntegrandKind::PsiPlusGamma { a: ap(1.0) }, &spec()).unwrap();
        assert!(v.value.norm() < 1e-10);
    }

    #[test]
    fn gamma_family_values() {
        let k = constants();
        let v = hankel_gamma_family(GammaSelector::GammaConst, c(0.0), &spec()).unwrap();
        assert!((v.value.re - k.gamma).abs() < 1e-10);
        let v = hankel_gamma_family(GammaSelector::InvGamma, c(3.0), &spec()).unwrap();
        assert!((v.value.re - 0.5).abs() < 1e-10);
        let v = hankel_gamma_family(GammaSelector::LogGamma, c(0.5), &spec()).unwrap();
        assert!((v.value.re - 0.5 * std::f64::consts::PI.ln()).abs() < 1e-9);
        let v = hankel_gamma_family(GammaSelector::PsiCombined, c(2.5), &spec()).unwrap();
        let w = digamma(c(2.5)).unwrap().value;
        assert!((v.value - w).norm() < 1e-9);
        let v = hankel_gamma_family(GammaSelector::PsiDirect, c(1.5), &spec()).unwrap();
        let w = digamma(c(1.5)).unwrap().value;
        assert!((v.value - w).norm() < 1e-9);
    }

    #[test]
    fn g_family_matches_closed_path() {
        for n in [0u32, 1, 2] {
            for av in [1.0, 2.5] {
                let v = hankel_zeta_family(ZetaSelector::G, c(n as f64), ap(av), &spec()).unwrap();
                let w = g(n, ap(av)).unwrap().value;
                assert!((v.value - w).norm() < 1e-8, "n={n} a={av}: {} vs {}", v.value, w);
            }
        }
    }

    #[test]
    fn lerch_family_spots() {
        let lam = LambdaParam::real(0.5).unwrap();
        // Φ(0.5, 0, a) = 2 independent of a
        let v = hankel_lerch_family(LerchSelector::PhiCont, lam, c(0.0), ap(2.0), &spec()).unwrap();
        assert!((v.value.re - 2.0).abs() < 1e-9, "{}", v.value);
        // Φ(0.5, 1, 1) = 2 ln 2
        let v = hankel_lerch_family(LerchSelector::PhiOne, lam, c(1.0), ap(1.0), &spec()).unwrap();
        assert!((v.value.re - 2.0 * 2.0f64.ln()).abs() < 1e-9, "{}", v.value);
        // (5.6) at n=0 equals l(λ,a) + ψ(1)Φ(λ,0,a)
        let v = hankel_lerch_family(LerchSelector::PhiDeriv, lam, c(0.0), ap(1.0), &spec()).unwrap();
        let w = l_function(lam, ap(1.0), LerchMethod::Series).unwrap().value
            + lerch_phi_neg(lam, 0, ap(1.0)).unwrap() * psi_int(0);
        assert!((v.value - w).norm() < 1e-9, "{} vs {}", v.value, w);
    }

    #[test]
    fn lerch_negative_lambda_pole_guard() {
        // λ = -0.5 puts poles at ln 2 ∓ iπ; the default contour clears them.
        let lam = LambdaParam::real(-0.5).unwrap();
        let v = hankel_lerch_family(LerchSelector::PhiDeriv, lam, c(1.0), ap(2.5), &spec()).unwrap();
        let w = lerch_phi_sderiv_neg(lam, 1, ap(2.5), SDerivRoute::Prop2).unwrap().value
            + lerch_phi_neg(lam, 1, ap(2.5)).unwrap() * psi_int(1);
        assert!((v.value - w).norm() < 1e-8, "{} vs {}", v.value, w);
    }

    #[test]
    fn epsilon_auto_reduction_inside_disc() {
        // λ = 0.9 has its pole at ln(10/9) ≈ 0.105; ε must shrink.
        let lam = LambdaParam::real(0.9).unwrap();
        let v = hankel_lerch_family(LerchSelector::PhiCont, lam, c(0.0), ap(1.0), &spec()).unwrap();
        assert!((v.value.re - 10.0).abs() < 1e-7, "{}", v.value);
    }

    #[test]
    fn zprime_neg1_and_barnes() {
        let v = hankel_zeta_family(ZetaSelector::ZPrimeNeg1, c(0.0), ap(1.5), &spec()).unwrap();
        let w = hurwitz_zeta_sderiv(c(-1.0), ap(1.5)).unwrap().value;
        assert!((v.value - w).norm() < 1e-9, "{} vs {}", v.value, w);
        for av in [1.0, 2.0] {
            let v = hankel_barnes(ap(av), &spec()).unwrap();
            assert!(v.value.norm() < 1e-9, "a={av}: {}", v.value);
        }
        let v = hankel_barnes(ap(2.5), &spec()).unwrap();
        let w = barnes_log_g(ap(2.5)).unwrap().value;
        assert!((v.value - w).norm() < 1e-7);
    }

    #[test]
    fn epsilon_independence_spot() {
        let mut vals = Vec::new();
        for eps in [0.5, 1.0, 3.0] {
            let spec = ContourSpec::with_epsilon(eps);
            let v = hankel_zeta_family(ZetaSelector::G, c(1.0), ap(1.5), &spec).unwrap();
            vals.push(v.value);
        }
        for w in vals.windows(2) {
            assert!((w[0] - w[1]).norm() < 1e-8, "{:?}", vals);
        }
    }

    #[test]
    fn ray_cancellation_without_log() {
        // Integer powers without Log z: the two ray pieces cancel.
        let (_, rays) = contour_pieces(
            IntegrandKind::ZetaNeg { n: 1, a: ap(1.0) },
            &spec(),
        )
        .unwrap();
        assert!(rays.norm() < 1e-12, "{}", rays.norm());
        let (_, rays) = contour_pieces(IntegrandKind::InvGamma { s: c(3.0) }, &spec()).unwrap();
        assert!(rays.norm() < 1e-12);
    }

    #[test]
    fn i_of_s_real_axis_identity() {
        // I(s) = sin(πs)/π ∫_0^∞ x^{s-1} e^{-ax}/(1-e^{-x}) dx
        use crate::quad::real_axis_quadrature;
        for s in [2.5, 3.5] {
            let a = 1.5;
            let contour = contour_integrate(IntegrandKind::IOfS { s: c(s), a: ap(a) }, &spec())
                .unwrap()
                .value;
            let f = |x: f64| c(x.powf(s - 1.0) * (-a * x).exp() / (1.0 - (-x).exp()));
            let axis = real_axis_quadrature(&f, 1e-11).unwrap().value;
            let rhs = axis * (std::f64::consts::PI * s).sin() / std::f64::consts::PI;
            assert!((contour - rhs).norm() < 1e-8, "s={s}: {contour} vs {rhs}");
        }
    }

    #[test]
    fn lambda_pole_on_ray_rejected() {
        // For λ close to 1 the integrand has a pole at ln(1/λ) ≈ 0.01 on
        // the positive axis, inside the default ε = 1 circle.
        let lam = LambdaParam::real(0.99).unwrap();
        let v = hankel_lerch_family(
            LerchSelector::PhiCont,
            lam,
            c(0.0),
            ap(1.0),
            &spec(),
        );
        // auto-reduced ε keeps this workable
        assert!(v.is_ok());
        assert!((v.unwrap().value.re - 100.0).abs() < 1e-4);
    }
}
