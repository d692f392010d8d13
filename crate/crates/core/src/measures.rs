//! Two-qubit entanglement measures: Wootters concurrence and negativity.
//!
//! Basis order is {|00⟩, |01⟩, |10⟩, |11⟩} with the left ket the first qubit.
//!
//! The concurrence needs the square roots λᵢ of the eigenvalues of ρρ̃, where
//! ρ̃ = (σy⊗σy)ρ*(σy⊗σy). These are the singular values of
//! X = √ρ (σy⊗σy) √ρ*, since X X† = √ρ ρ̃ √ρ. We read them off as the positive
//! half of the spectrum of the Hermitian dilation [[0, X], [X†, 0]], which keeps
//! the computation inside the Hermitian eigensolver without squaring (and later
//! square-rooting) small eigenvalues.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{hermitian_eig, ComplexMatrix, Subsystem};

/// Validation tolerance for density matrices built directly from data.
pub const DENSITY_TOL: f64 = 1e-12;

/// Eigenvalues with |x| at or below this are treated as exact zeros before square roots.
pub const ROUNDOFF_CLAMP: f64 = 1e-12;

/// Two-qubit density matrix: Hermitian, unit trace, positive semidefinite.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoQubitDensity {
    matrix: ComplexMatrix,
}

impl TwoQubitDensity {
    /// Validates at [`DENSITY_TOL`].
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        Self::with_tolerance(matrix, DENSITY_TOL)
    }

    /// Validates at a caller-chosen tolerance, then stores the Hermitian part.
    pub fn with_tolerance(matrix: ComplexMatrix, tol: f64) -> Result<Self> {
        if matrix.rows() != 4 || matrix.cols() != 4 {
            return Err(Error::InvalidDensity(format!("expected 4x4, got {}x{}", matrix.rows(), matrix.cols())));
        }
        let asym = matrix.max_asymmetry();
        if asym > tol {
            return Err(Error::InvalidDensity(format!("not Hermitian (max asymmetry {asym:e})")));
        }
        let matrix = matrix.hermitian_part();
        let tr = matrix.trace().re;
        if (tr - 1.0).abs() > tol {
            return Err(Error::InvalidDensity(format!("trace {tr} != 1")));
        }
        let min = hermitian_eig(&matrix)?.min_value();
        if min < -tol {
            return Err(Error::InvalidDensity(format!("negative eigenvalue {min:e}")));
        }
        Ok(Self { matrix })
    }

    /// |ψ⟩⟨ψ| for a normalized 4-component ket.
    pub fn from_pure(ket: &[Complex64; 4]) -> Result<Self> {
        Self::new(ComplexMatrix::outer(ket, ket))
    }

    pub fn ket00() -> Self {
        Self::basis_projector(0)
    }

    pub fn ket11() -> Self {
        Self::basis_projector(3)
    }

    /// (|00⟩ + |11⟩)/√2.
    pub fn bell_phi_plus() -> Self {
        let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let z = Complex64::new(0.0, 0.0);
        Self { matrix: ComplexMatrix::outer(&[h, z, z, h], &[h, z, z, h]) }
    }

    pub fn maximally_mixed() -> Self {
        Self { matrix: ComplexMatrix::identity(4).scale_real(0.25) }
    }

    /// `p`·Bell + (1 − p)·I/4.
    pub fn werner(p: f64) -> Result<Self> {
        let m = Self::bell_phi_plus()
            .matrix
            .scale_real(p)
            .try_add(&ComplexMatrix::identity(4).scale_real((1.0 - p) / 4.0))?;
        Self::new(m)
    }

    fn basis_projector(k: usize) -> Self {
        let mut diag = [0.0; 4];
        diag[k] = 1.0;
        Self { matrix: ComplexMatrix::from_real_diagonal(&diag) }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn trace_error(&self) -> f64 {
        (self.matrix.trace() - Complex64::new(1.0, 0.0)).norm()
    }

    pub fn min_eigenvalue(&self) -> Result<f64> {
        Ok(hermitian_eig(&self.matrix)?.min_value())
    }

    pub fn is_x_state(&self, tol: f64) -> bool {
        let m = &self.matrix;
        [(0, 1), (0, 2), (1, 3), (2, 3)].iter().all(|&(i, j)| m[(i, j)].norm() <= tol && m[(j, i)].norm() <= tol)
    }
}

fn clamp_roundoff(x: f64, what: &str) -> Result<f64> {
    if x.abs() <= ROUNDOFF_CLAMP {
        Ok(0.0)
    } else if x < 0.0 {
        Err(Error::NumericalFailure(format!("{what} has negative eigenvalue {x:e}")))
    } else {
        Ok(x)
    }
}

/// σy ⊗ σy in the standard basis.
pub fn sigma_y_sigma_y() -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(4, 4);
    m[(0, 3)] = Complex64::new(-1.0, 0.0);
    m[(3, 0)] = Complex64::new(-1.0, 0.0);
    m[(1, 2)] = Complex64::new(1.0, 0.0);
    m[(2, 1)] = Complex64::new(1.0, 0.0);
    m
}

/// Principal square root of a positive semidefinite matrix.
pub fn psd_sqrt(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let eig = hermitian_eig(m)?;
    for &v in &eig.values {
        clamp_roundoff(v, "matrix under square root")?;
    }
    Ok(eig.map_spectrum(|x| if x.abs() <= ROUNDOFF_CLAMP { 0.0 } else { x.sqrt() }))
}

/// Spin-flipped state ρ̃ = (σy⊗σy) ρ* (σy⊗σy).
pub fn spin_flip(rho: &TwoQubitDensity) -> ComplexMatrix {
    let yy = sigma_y_sigma_y();
    &(&yy * &rho.matrix.conj()) * &yy
}

/// λ₁ ≥ λ₂ ≥ λ₃ ≥ λ₄: square roots of the eigenvalues of ρρ̃.
pub fn wootters_lambdas(rho: &TwoQubitDensity) -> Result<[f64; 4]> {
    let sqrt_rho = psd_sqrt(&rho.matrix)?;
    let x = &(&sqrt_rho * &sigma_y_sigma_y()) * &sqrt_rho.conj();
    let x_adj = x.adjoint();
    let mut dilation = ComplexMatrix::zeros(8, 8);
    for i in 0..4 {
        for j in 0..4 {
            dilation[(i, 4 + j)] = x[(i, j)];
            dilation[(4 + i, j)] = x_adj[(i, j)];
        }
    }
    let eig = hermitian_eig(&dilation.hermitian_part())?;
    let mut lambdas = [0.0; 4];
    for (dst, &v) in lambdas.iter_mut().zip(&eig.values) {
        *dst = clamp_roundoff(v, "spin-flip product")?;
    }
    Ok(lambdas)
}

/// Concurrence before clamping to [0, 1]: λ₁ − λ₂ − λ₃ − λ₄ (may be negative).
pub fn concurrence_unclamped(rho: &TwoQubitDensity) -> Result<f64> {
    let [l1, l2, l3, l4] = wootters_lambdas(rho)?;
    Ok(l1 - l2 - l3 - l4)
}

/// Wootters concurrence in [0, 1].
pub fn concurrence(rho: &TwoQubitDensity) -> Result<f64> {
    Ok(concurrence_unclamped(rho)?.clamp(0.0, 1.0))
}

/// Closed form for X-states (entries only on the diagonal and anti-diagonal):
/// C = 2·max(0, |ρ₀₃| − √(ρ₁₁ρ₂₂), |ρ₁₂| − √(ρ₀₀ρ₃₃)).
///
/// The off-X entries of `rho` are ignored.
pub fn concurrence_x_state(rho: &TwoQubitDensity) -> f64 {
    let m = &rho.matrix;
    let d = |i: usize| m[(i, i)].re.max(0.0);
    let outer = m[(0, 3)].norm() - (d(1) * d(2)).sqrt();
    let inner = m[(1, 2)].norm() - (d(0) * d(3)).sqrt();
    (2.0 * outer.max(inner).max(0.0)).min(1.0)
}

/// Sum of |negative eigenvalues| of the partial transpose.
pub fn negativity(rho: &TwoQubitDensity) -> Result<f64> {
    let pt = rho.matrix.partial_transpose(Subsystem::Second)?;
    let eig = hermitian_eig(&pt)?;
    Ok(eig.values.iter().filter(|&&x| x < 0.0).fold(0.0, |acc, x| acc - x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eq8_state() -> TwoQubitDensity {
        let gamma = -2.0 / 3.0;
        let mut m = ComplexMatrix::from_real_diagonal(&[2.0 / 8.0, 3.0 / 8.0, 3.0 / 8.0, 0.0]);
        m[(1, 2)] = Complex64::new(3.0 * gamma / 8.0, 0.0);
        m[(2, 1)] = Complex64::new(3.0 * gamma / 8.0, 0.0);
        TwoQubitDensity::new(m).unwrap()
    }

    #[test]
    fn bell_and_product() {
        assert!((concurrence(&TwoQubitDensity::bell_phi_plus()).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(concurrence(&TwoQubitDensity::ket00()).unwrap(), 0.0);
        assert!((negativity(&TwoQubitDensity::bell_phi_plus()).unwrap() - 0.5).abs() < 1e-14);
        assert!(negativity(&TwoQubitDensity::ket00()).unwrap().abs() < 1e-15);
        assert!(negativity(&TwoQubitDensity::maximally_mixed()).unwrap().abs() < 1e-15);
    }

    #[test]
    fn lattice_pair_state_concurrence_is_half() {
        let rho = eq8_state();
        // X-state form: 2·(|3γ/8| − √(ρ₀₀·ρ₃₃)) = 2·(1/4 − 0)
        assert!((concurrence_x_state(&rho) - 0.5).abs() < 1e-15);
        assert!((concurrence(&rho).unwrap() - 0.5).abs() < 1e-12);
        assert!(negativity(&rho).unwrap() > 0.0);
    }

    #[test]
    fn werner_closed_form() {
        for p in [0.0, 1.0 / 3.0, 0.5, 0.8, 1.0] {
            let rho = TwoQubitDensity::werner(p).unwrap();
            let want = ((3.0 * p - 1.0) / 2.0).max(0.0);
            assert!((concurrence(&rho).unwrap() - want).abs() < 1e-12, "p = {p}");
        }
    }

    #[test]
    fn validation_errors() {
        let mut m = ComplexMatrix::identity(4).scale_real(0.25);
        m[(0, 1)] = Complex64::new(0.1, 0.0);
        assert!(TwoQubitDensity::new(m).is_err());
        assert!(TwoQubitDensity::new(ComplexMatrix::identity(4)).is_err());
        assert!(TwoQubitDensity::new(ComplexMatrix::from_real_diagonal(&[1.5, -0.5, 0.0, 0.0])).is_err());
        assert!(TwoQubitDensity::new(ComplexMatrix::identity(2)).is_err());
    }

    #[test]
    fn dilation_matches_product_spectrum() {
        // singular values of X squared are the eigenvalues of √ρ ρ̃ √ρ
        let rho = TwoQubitDensity::werner(0.7).unwrap();
        let s = psd_sqrt(rho.matrix()).unwrap();
        let r = &(&s * &spin_flip(&rho)) * &s;
        let mu = hermitian_eig(&r.hermitian_part()).unwrap().values;
        let lambdas = wootters_lambdas(&rho).unwrap();
        for (l, m) in lambdas.iter().zip(&mu) {
            assert!((l * l - m).abs() < 1e-12);
        }
    }

    #[test]
    fn x_state_detection() {
        assert!(eq8_state().is_x_state(0.0));
        let plus = Complex64::new(0.5, 0.0);
        let ket = [plus; 4];
        assert!(!TwoQubitDensity::from_pure(&ket).unwrap().is_x_state(1e-12));
    }
}
