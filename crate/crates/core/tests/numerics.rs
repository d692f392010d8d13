mod common;

use common::*;
use nalgebra::DMatrix;
use proptest::prelude::*;
use qwalk_core::numerics::{hermitian_eig, ComplexMatrix, Subsystem};

fn random_hermitian(rng: &mut TestRng, n: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = c(rng.normal(), rng.normal());
        }
    }
    (&m + &m.adjoint()).scale_real(0.5)
}

fn random_psd(rng: &mut TestRng, n: usize) -> ComplexMatrix {
    let mut g = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            g[(i, j)] = c(rng.normal(), rng.normal());
        }
    }
    let m = &g * &g.adjoint();
    let tr = m.trace().re;
    m.scale_real(1.0 / tr)
}

fn min_eigenvalue(m: &ComplexMatrix) -> f64 {
    hermitian_eig(m).unwrap().min_value()
}

proptest! {
    #[test]
    fn eig_reconstructs_and_is_orthonormal(seed in any::<u64>(), n in 1usize..=16) {
        let mut rng = TestRng::new(seed);
        let m = random_hermitian(&mut rng, n);
        let e = hermitian_eig(&m).unwrap();
        let scale = m.max_abs().max(1.0);
        prop_assert!(e.reconstruct().max_abs_diff(&m) <= 1e-12 * scale * n as f64);
        let gram = &e.vectors.adjoint() * &e.vectors;
        prop_assert!(gram.max_abs_diff(&ComplexMatrix::identity(n)) <= 1e-12 * n as f64);
        prop_assert!(e.values.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn eig_agrees_with_nalgebra(seed in any::<u64>(), n in 1usize..=16) {
        let mut rng = TestRng::new(seed);
        let m = random_hermitian(&mut rng, n);
        let dm = DMatrix::from_fn(n, n, |i, j| nalgebra::Complex::new(m[(i, j)].re, m[(i, j)].im));
        let mut reference: Vec<f64> = dm.symmetric_eigenvalues().iter().copied().collect();
        reference.sort_by(|a, b| b.total_cmp(a));
        let ours = hermitian_eig(&m).unwrap().values;
        for (a, b) in ours.iter().zip(&reference) {
            prop_assert!((a - b).abs() <= 1e-10 * m.max_abs().max(1.0) * n as f64, "{ours:?} vs {reference:?}");
        }
    }

    #[test]
    fn partial_trace_preserves_trace_and_positivity(seed in any::<u64>(), d1 in 1usize..=4, d2 in 1usize..=4) {
        let mut rng = TestRng::new(seed);
        let rho = random_psd(&mut rng, d1 * d2);
        for keep in [Subsystem::First, Subsystem::Second] {
            let r = rho.partial_trace(keep, (d1, d2)).unwrap();
            prop_assert!((r.trace() - rho.trace()).norm() <= 1e-13);
            prop_assert!(r.is_hermitian(1e-13));
            prop_assert!(min_eigenvalue(&r) >= -1e-13);
        }
    }

    #[test]
    fn partial_trace_of_product_returns_factor(seed in any::<u64>()) {
        let mut rng = TestRng::new(seed);
        let a = random_psd(&mut rng, 2);
        let b = random_psd(&mut rng, 4);
        let ab = a.kron(&b);
        prop_assert!(ab.partial_trace(Subsystem::First, (2, 4)).unwrap().max_abs_diff(&a) <= 1e-14);
        prop_assert!(ab.partial_trace(Subsystem::Second, (2, 4)).unwrap().max_abs_diff(&b) <= 1e-14);
    }

    #[test]
    fn partial_transpose_is_an_involution(seed in any::<u64>()) {
        let mut rng = TestRng::new(seed);
        let m = random_hermitian(&mut rng, 4);
        for side in [Subsystem::First, Subsystem::Second] {
            let back = m.partial_transpose(side).unwrap().partial_transpose(side).unwrap();
            prop_assert_eq!(&back, &m);
        }
        // transposing both halves is the full transpose
        let both = m.partial_transpose(Subsystem::First).unwrap().partial_transpose(Subsystem::Second).unwrap();
        prop_assert_eq!(both, m.transpose());
    }
}

#[test]
fn degenerate_spectrum_is_resolved() {
    // I ⊗ diag(1, 1, 2, 2) rotated by a random unitary built from eigenvectors
    let mut rng = TestRng::new(11);
    let q = hermitian_eig(&random_hermitian(&mut rng, 8)).unwrap().vectors;
    let d = ComplexMatrix::from_real_diagonal(&[1., 1., 1., 2., 2., 2., 3., 3.]);
    let m = (&(&q * &d) * &q.adjoint()).hermitian_part();
    let e = hermitian_eig(&m).unwrap();
    let want = [3., 3., 2., 2., 2., 1., 1., 1.];
    for (a, b) in e.values.iter().zip(want) {
        assert!((a - b).abs() < 1e-12);
    }
    assert!(e.reconstruct().max_abs_diff(&m) < 1e-12);
}
