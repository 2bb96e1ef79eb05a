//! Orthogonal polynomials, `ln Gamma` and Gauss quadrature rules.

mod gamma;
mod poly;
mod quadrature;

pub use gamma::ln_gamma;
pub use poly::{hermite, hermite_with, laguerre, laguerre_with, RecurrenceScalar};
pub use quadrature::{
    gauss_generalized_laguerre, gauss_hermite, gauss_legendre, QuadratureKind, QuadratureRule,
};
