//! Grid discretization of the position-dependent-mass Hamiltonian and a
//! Sturm-bisection eigensolver. Used as an oracle: nothing here consults the
//! closed-form energies.

mod grid;
mod oracle;
mod tridiag;

pub use grid::{assemble_hamiltonian, AssembledHamiltonian, GridSpec, Sector};
pub use oracle::{converge_spectrum, ConvergedSpectrum};
pub use tridiag::SymTriMatrix;
