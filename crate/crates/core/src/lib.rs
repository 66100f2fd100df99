//! Hurwitz zeta, Lerch transcendent, digamma/logGamma and Barnes-G
//! machinery, with closed-form series and logGamma-moment evaluators
//! validated against two independent oracles: brute-force summation and
//! direct quadrature of Hankel keyhole-contour representations.
//!
//! Module map:
//! - [`special`] — Bernoulli/Stirling combinatorics, digamma, logGamma,
//!   Hurwitz zeta (Euler–Maclaurin continuation) and the g(n,a) family.
//! - [`lerch`] — the Lerch transcendent, its values and s-derivatives at
//!   nonpositive integer order, and the auxiliary l(λ,a).
//! - [`hankel`] — quadrature over the keyhole contour wrapping the
//!   negative real axis; the independent oracle for everything else.
//! - [`series`] — closed forms for the zeta- and Lerch-coefficient
//!   series families, plus their brute-force comparators.
//! - [`integrals`] — logGamma moment integrals, negative-order
//!   polygamma, and the g integration rule.
//! - [`checks`] — named identity suites shared by the CLI and the
//!   acceptance tests.

pub mod checks;
pub mod hankel;
pub mod integrals;
pub mod lerch;
pub mod quad;
pub mod series;
pub mod special;
pub mod types;

pub use types::{
    AParam, ComplexScalar, ContourSpec, Error, EvalResult, LambdaParam, Method, Result,
    SeriesConfig,
};
