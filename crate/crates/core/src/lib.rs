//! Exactly solvable quantum harmonic oscillators with the position-dependent
//! mass `M(x) = m0 (lambda0^2 x^2)^a`.
//!
//! Two families are covered: the canonically deformed oscillator (Hermite
//! wavefunctions, spectrum `(a+1) hbar omega (n + 1/2)`) and the deformed
//! parabose oscillator (Laguerre wavefunctions in each parity sector).
//!
//! * [`specfun`]: orthogonal polynomials, `ln Gamma`, Gauss rules.
//! * [`model`]: parameters, mass law, potential, energies, wavefunctions.
//! * [`jet`] / [`operators`]: truncated Taylor arithmetic and the operator
//!   realizations acting on it.
//! * [`numerics`]: grid discretization and a Sturm-bisection eigensolver
//!   used as an independent oracle for the spectra.
//! * [`verify`]: verification suites producing structured reports.

pub mod dd;
pub mod error;
pub mod jet;
pub mod model;
pub mod numerics;
pub mod operators;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
pub use jet::{AnalyticFunction, Jet};
pub use model::{Family, OscillatorParams, SolutionExponents, StateIndex};
pub use numerics::{GridSpec, Sector, SymTriMatrix};
pub use operators::{OperatorSpec, Statistics};
pub use specfun::{QuadratureKind, QuadratureRule};
pub use verify::VerificationReport;
