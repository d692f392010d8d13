//! Deterministic inputs for the kernel benchmarks.

use qwalk_core::{Complex64, ComplexMatrix, TwoQubitDensity};

/// Dense Hermitian matrix with entries from a fixed trigonometric pattern.
pub fn hermitian(n: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let k = (i * n + j) as f64;
            m[(i, j)] = Complex64::new((1.3 * k).sin(), (0.7 * k).cos());
        }
    }
    (&m + &m.adjoint()).scale_real(0.5)
}

/// Full-rank two-qubit state: `M M† / Tr(M M†)` with `M` from [`hermitian`] plus a shift.
pub fn mixed_density() -> TwoQubitDensity {
    let m = &hermitian(4) + &ComplexMatrix::identity(4).scale_real(0.3);
    let mm = &m * &m.adjoint();
    let tr = mm.trace().re;
    TwoQubitDensity::new(mm.scale_real(1.0 / tr).hermitian_part()).expect("valid density")
}
