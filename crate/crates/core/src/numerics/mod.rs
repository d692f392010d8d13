//! Dense complex linear algebra for the small operators used throughout the crate.

mod eig;
mod matrix;

pub use eig::{hermitian_eig, EigenDecomposition, HERMITIAN_TOL, OFF_DIAGONAL_TOL};
pub use matrix::{ComplexMatrix, Subsystem};

pub use num_complex::Complex64;

/// ⟨a|b⟩, conjugating the left argument.
pub fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}
