//! Property-based tests for structural identities that should hold across
//! randomly drawn parameters, not just the fixed check grids.

use hzeta::lerch::lerch_phi;
use hzeta::special::{barnes_log_g, digamma, hurwitz_zeta, log_gamma};
use hzeta::types::{AParam, ComplexScalar, LambdaParam};
use proptest::prelude::*;

fn rel_dev(x: ComplexScalar, y: ComplexScalar) -> f64 {
    (x - y).norm() / (1.0 + y.norm())
}

fn a_strategy() -> impl Strategy<Value = ComplexScalar> {
    (0.5f64..4.0, -0.5f64..0.5).prop_map(|(re, im)| ComplexScalar::new(re, im))
}

fn s_strategy() -> impl Strategy<Value = ComplexScalar> {
    (-6.0f64..6.0, -2.0f64..2.0)
        .prop_filter("keep s away from the pole at 1", |(re, im)| {
            (re - 1.0).abs() > 0.1 || im.abs() > 0.1
        })
        .prop_map(|(re, im)| ComplexScalar::new(re, im))
}

fn lambda_strategy() -> impl Strategy<Value = ComplexScalar> {
    (-0.9f64..0.9, -0.4f64..0.4)
        .prop_filter("stay inside the unit disc", |(re, im)| {
            (re * re + im * im).sqrt() < 0.95
        })
        .prop_map(|(re, im)| ComplexScalar::new(re, im))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hurwitz_shift_identity(s in s_strategy(), av in a_strategy()) {
        let a = AParam::new(av).unwrap();
        let a1 = AParam::new(av + 1.0).unwrap();
        let lhs = hurwitz_zeta(s, a).unwrap().value;
        let rhs = av.powc(-s) + hurwitz_zeta(s, a1).unwrap().value;
        prop_assert!(rel_dev(lhs, rhs) < 1e-9, "dev {}", rel_dev(lhs, rhs));
    }

    #[test]
    fn lerch_shift_identity(
        s in s_strategy(),
        av in a_strategy(),
        lv in lambda_strategy(),
    ) {
        let a = AParam::new(av).unwrap();
        let a1 = AParam::new(av + 1.0).unwrap();
        let lam = LambdaParam::new(lv).unwrap();
        let lhs = lerch_phi(lam, s, a).unwrap().value;
        let rhs = av.powc(-s) + lv * lerch_phi(lam, s, a1).unwrap().value;
        // far from the series half-plane the value comes from contour
        // quadrature, so allow its tolerance rather than the series one
        prop_assert!(rel_dev(lhs, rhs) < 1e-7, "dev {}", rel_dev(lhs, rhs));
    }

    #[test]
    fn log_gamma_recurrence(av in a_strategy()) {
        let lhs = log_gamma(av + 1.0).unwrap().value;
        let rhs = log_gamma(av).unwrap().value + av.ln();
        prop_assert!(rel_dev(lhs, rhs) < 1e-11, "dev {}", rel_dev(lhs, rhs));
    }

    #[test]
    fn digamma_recurrence(av in a_strategy()) {
        let lhs = digamma(av + 1.0).unwrap().value;
        let rhs = digamma(av).unwrap().value + 1.0 / av;
        prop_assert!(rel_dev(lhs, rhs) < 1e-11, "dev {}", rel_dev(lhs, rhs));
    }

    #[test]
    fn barnes_log_difference(av in a_strategy()) {
        let lhs = barnes_log_g(AParam::new(av + 1.0).unwrap()).unwrap().value;
        let rhs = barnes_log_g(AParam::new(av).unwrap()).unwrap().value
            + log_gamma(av).unwrap().value;
        prop_assert!(rel_dev(lhs, rhs) < 1e-9, "dev {}", rel_dev(lhs, rhs));
    }

    #[test]
    fn lerch_at_s_zero_is_geometric(
        av in a_strategy(),
        lv in lambda_strategy(),
    ) {
        // Phi(lambda, 0, a) is the geometric series 1/(1-lambda).
        let lam = LambdaParam::new(lv).unwrap();
        let a = AParam::new(av).unwrap();
        let lhs = lerch_phi(lam, ComplexScalar::new(0.0, 0.0), a).unwrap().value;
        let rhs = ComplexScalar::new(1.0, 0.0) / (ComplexScalar::new(1.0, 0.0) - lv);
        prop_assert!(rel_dev(lhs, rhs) < 1e-10, "dev {}", rel_dev(lhs, rhs));
    }
}
