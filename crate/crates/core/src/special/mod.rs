//! Elementary special functions and combinatorial polynomials consumed
//! by every other module.

mod bernoulli;
mod gamma;
mod gfam;
mod hurwitz;
mod stirling;

pub use bernoulli::{bernoulli_number, bernoulli_poly, zeta_neg_int, BERNOULLI_CEILING};
pub use gamma::{digamma, euler_gamma, gamma_fn, harmonic, log_gamma, psi_int};
pub use gfam::{barnes_log_g, barnes_polynomial, constants, g, Constants, GFamilyValue};
pub use hurwitz::{
    hurwitz_zeta, hurwitz_zeta_sderiv, hurwitz_zeta_sderiv_with, hurwitz_zeta_with, EmParams,
};
pub use stirling::{binomial, binomial_f, geometric_poly, stirling2, STIRLING_CEILING};
