//! Shared value types: the complex carrier, validated parameters,
//! evaluation results and configuration records.

use num_complex::Complex64;
use thiserror::Error;

/// The universal numeric carrier. All function values and parameters
/// travel as double-precision complex numbers.
pub type ComplexScalar = Complex64;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole at {0}")]
    Pole(String),
    #[error("order {order} exceeds ceiling {ceiling} for {what}")]
    OrderTooLarge {
        what: &'static str,
        order: u32,
        ceiling: u32,
    },
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("quadrature failed to converge: {0}")]
    NonConvergence(String),
    #[error("series converges too slowly (|lambda| = {modulus}) within {budget} terms")]
    SlowConvergence { modulus: f64, budget: usize },
    #[error("term budget of {budget} exhausted; best partial sum {value} (tail bound {abs_err:e})")]
    BudgetExhausted {
        budget: usize,
        value: ComplexScalar,
        abs_err: f64,
    },
}

impl Error {
    /// Exit-code class used by the CLI: 2 for domain-type errors,
    /// 3 for convergence failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_)
            | Error::Pole(_)
            | Error::OrderTooLarge { .. }
            | Error::Overflow(_) => 2,
            Error::NonConvergence(_)
            | Error::SlowConvergence { .. }
            | Error::BudgetExhausted { .. } => 3,
        }
    }
}

/// Which code path produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Series,
    EulerMaclaurin,
    Contour,
    ClosedForm,
    Quadrature,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::EulerMaclaurin => "euler_maclaurin",
            Method::Contour => "contour",
            Method::ClosedForm => "closed_form",
            Method::Quadrature => "quadrature",
        }
    }
}

/// Computed value together with an estimated absolute error and the
/// method tag of the path actually taken.
#[derive(Debug, Clone, Copy)]
pub struct EvalResult {
    pub value: ComplexScalar,
    pub abs_err: f64,
    pub method: Method,
}

impl EvalResult {
    pub fn new(value: ComplexScalar, abs_err: f64, method: Method) -> Self {
        EvalResult {
            value,
            abs_err,
            method,
        }
    }
}

/// The parameter `a` with Re(a) > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AParam(ComplexScalar);

impl AParam {
    pub fn new(value: ComplexScalar) -> Result<Self> {
        if value.re <= 0.0 || !value.re.is_finite() || !value.im.is_finite() {
            return Err(Error::Domain(format!("Re(a) > 0 required, got a = {value}")));
        }
        Ok(AParam(value))
    }

    pub fn real(x: f64) -> Result<Self> {
        Self::new(ComplexScalar::new(x, 0.0))
    }

    pub fn value(&self) -> ComplexScalar {
        self.0
    }

    /// Shift by a complex offset; the result must still satisfy Re > 0.
    pub fn shifted(&self, dz: ComplexScalar) -> Result<Self> {
        Self::new(self.0 + dz)
    }
}

/// The parameter λ with |λ| ≤ 1, λ ≠ 1. Operations that additionally
/// need |λ| < 1 enforce that themselves.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaParam(ComplexScalar);

impl LambdaParam {
    pub fn new(value: ComplexScalar) -> Result<Self> {
        let r = value.norm();
        if !r.is_finite() || r > 1.0 + 1e-15 {
            return Err(Error::Domain(format!("|lambda| <= 1 required, got {value}")));
        }
        if value == ComplexScalar::new(1.0, 0.0) {
            return Err(Error::Domain("lambda = 1 is excluded (use hurwitz_zeta)".into()));
        }
        Ok(LambdaParam(value))
    }

    pub fn real(x: f64) -> Result<Self> {
        Self::new(ComplexScalar::new(x, 0.0))
    }

    pub fn value(&self) -> ComplexScalar {
        self.0
    }

    pub fn modulus(&self) -> f64 {
        self.0.norm()
    }

    /// Errors unless |λ| < 1 strictly.
    pub fn require_inside_disc(&self) -> Result<()> {
        if self.modulus() >= 1.0 - 1e-15 {
            return Err(Error::Domain(format!(
                "|lambda| < 1 required here, got |lambda| = {}",
                self.modulus()
            )));
        }
        Ok(())
    }
}

/// Truncation policy for brute-force summation oracles.
#[derive(Debug, Clone, Copy)]
pub struct SeriesConfig {
    pub max_terms: usize,
    pub rel_tol: f64,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig {
            max_terms: 100_000,
            rel_tol: 1e-12,
        }
    }
}

impl SeriesConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_terms < 10 {
            return Err(Error::Domain("max_terms >= 10 required".into()));
        }
        if self.rel_tol <= 0.0 || self.rel_tol.is_nan() {
            return Err(Error::Domain("rel_tol > 0 required".into()));
        }
        Ok(())
    }
}

/// Hankel contour parameters: circle radius, ray truncation and node counts.
#[derive(Debug, Clone, Copy)]
pub struct ContourSpec {
    /// Circle radius; must stay inside the nearest denominator poles at |z| = 2π.
    pub epsilon: f64,
    /// Minimum ray extent; the rays are extended further until the
    /// integrand magnitude falls below `tail_tol`.
    pub ray_cutoff: f64,
    /// Total Gauss node count on the circle piece (multiple of 16).
    pub n_circle: usize,
    /// Gauss nodes per ray panel.
    pub n_ray: usize,
    pub tail_tol: f64,
}

impl Default for ContourSpec {
    fn default() -> Self {
        ContourSpec {
            epsilon: 1.0,
            ray_cutoff: 40.0,
            n_circle: 64,
            n_ray: 16,
            tail_tol: 1e-16,
        }
    }
}

impl ContourSpec {
    pub fn with_epsilon(epsilon: f64) -> Self {
        ContourSpec {
            epsilon,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.epsilon > 0.0 && self.epsilon < 2.0 * std::f64::consts::PI) {
            return Err(Error::Domain(
                "0 < epsilon < 2*pi required for the contour circle".into(),
            ));
        }
        if self.ray_cutoff <= self.epsilon {
            return Err(Error::Domain("ray_cutoff > epsilon required".into()));
        }
        if self.n_circle < 8 || self.n_ray < 4 {
            return Err(Error::Domain("node counts too small".into()));
        }
        if self.tail_tol <= 0.0 || self.tail_tol.is_nan() {
            return Err(Error::Domain("tail_tol > 0 required".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aparam_rejects_left_half_plane() {
        assert!(AParam::real(0.5).is_ok());
        assert!(AParam::real(0.0).is_err());
        assert!(AParam::real(-1.0).is_err());
        assert!(AParam::new(ComplexScalar::new(1.0, f64::NAN)).is_err());
    }

    #[test]
    fn lambda_rejects_one_and_outside_disc() {
        assert!(LambdaParam::real(1.0).is_err());
        assert!(LambdaParam::real(1.5).is_err());
        assert!(LambdaParam::real(-1.0).is_ok());
        assert!(LambdaParam::real(0.5).unwrap().require_inside_disc().is_ok());
        assert!(LambdaParam::real(-1.0).unwrap().require_inside_disc().is_err());
    }

    #[test]
    fn error_exit_codes() {
        assert_eq!(Error::Domain("x".into()).exit_code(), 2);
        assert_eq!(Error::NonConvergence("x".into()).exit_code(), 3);
    }
}
