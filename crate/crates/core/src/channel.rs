//! Transfer of lattice-pair entanglement onto two external qubits A and B.
//!
//! Qubit A couples to site −l and B to site +l through the exchange
//! interaction `σ₊⊗σ₋ + σ₋⊗σ₊`. With φ = ωt the pairwise evolution is
//! `U_I(φ) = exp(−iφ(σ₋⊗σ₊ + σ₊⊗σ₋))`, and the four-qubit unitary on the
//! ordering (−l, +l, A, B) is `W = P (U_I ⊗ U_I) Pᵀ`, where P swaps the middle
//! two factors of (−l, A, +l, B).
//!
//! Tracing the lattice pair out of `W (ρ_latt ⊗ ρ_AB) W†` gives a channel on AB
//! with Kraus operators `A_ij = √λ_j ⟨i|W|η_j⟩`, where `{λ_j, |η_j⟩}` is the
//! spectral decomposition of `ρ_latt` and `⟨i|` runs over the lattice-pair basis.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::measures::{concurrence, negativity, TwoQubitDensity};
use crate::numerics::{hermitian_eig, ComplexMatrix};

/// Lattice eigenvalues below this contribute no Kraus operator.
pub const KRAUS_EIGENVALUE_CUTOFF: f64 = 1e-14;

/// Lattice eigenvalues below this mean the lattice state is not a density matrix.
pub const NEGATIVE_EIGENVALUE_TOL: f64 = 1e-10;

/// Tolerance used to validate channel outputs.
pub const CHANNEL_TOL: f64 = 1e-10;

/// Dimensionless interaction phase φ = ωt.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct InteractionPhase(pub f64);

impl InteractionPhase {
    pub fn radians(self) -> f64 {
        self.0
    }
}

impl From<f64> for InteractionPhase {
    fn from(phi: f64) -> Self {
        Self(phi)
    }
}

/// `U_I(φ)` on (lattice site, system qubit): identity on |00⟩, |11⟩ and
/// `[[cos φ, −i sin φ], [−i sin φ, cos φ]]` on span{|01⟩, |10⟩}.
pub fn interaction_unitary(phase: InteractionPhase) -> ComplexMatrix {
    let (s, c) = phase.0.sin_cos();
    let mut u = ComplexMatrix::zeros(4, 4);
    u[(0, 0)] = Complex64::new(1.0, 0.0);
    u[(3, 3)] = Complex64::new(1.0, 0.0);
    u[(1, 1)] = Complex64::new(c, 0.0);
    u[(2, 2)] = Complex64::new(c, 0.0);
    u[(1, 2)] = Complex64::new(0.0, -s);
    u[(2, 1)] = Complex64::new(0.0, -s);
    u
}

/// `W = P (U_I ⊗ U_I) Pᵀ` on (−l, +l, A, B), index bits `[x₋ₗ x₊ₗ x_A x_B]`.
pub fn build_w(phase: InteractionPhase) -> ComplexMatrix {
    let u = interaction_unitary(phase);
    let bit = |idx: usize, k: usize| (idx >> (3 - k)) & 1;
    let mut w = ComplexMatrix::zeros(16, 16);
    for r in 0..16 {
        for s in 0..16 {
            let left = u[((bit(r, 0) << 1) | bit(r, 2), (bit(s, 0) << 1) | bit(s, 2))];
            let right = u[((bit(r, 1) << 1) | bit(r, 3), (bit(s, 1) << 1) | bit(s, 3))];
            w[(r, s)] = left * right;
        }
    }
    w
}

/// Kraus operators on H_A ⊗ H_B.
#[derive(Debug, Clone)]
pub struct KrausSet {
    operators: Vec<ComplexMatrix>,
}

impl KrausSet {
    pub fn new(operators: Vec<ComplexMatrix>) -> Result<Self> {
        if let Some(bad) = operators.iter().find(|k| k.rows() != 4 || k.cols() != 4) {
            return Err(Error::ShapeMismatch {
                expected: "4x4 Kraus operator".into(),
                got: format!("{}x{}", bad.rows(), bad.cols()),
            });
        }
        Ok(Self { operators })
    }

    pub fn operators(&self) -> &[ComplexMatrix] {
        &self.operators
    }

    pub fn len(&self) -> usize {
        self.operators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.operators.is_empty()
    }

    /// Σ A†A.
    pub fn completeness(&self) -> ComplexMatrix {
        self.operators.iter().fold(ComplexMatrix::zeros(4, 4), |acc, k| &acc + &(&k.adjoint() * k))
    }

    /// max-norm distance of Σ A†A from the identity.
    pub fn completeness_error(&self) -> f64 {
        self.completeness().max_abs_diff(&ComplexMatrix::identity(4))
    }
}

/// Kraus set of the AB channel induced by the lattice-pair state `lattice` at phase φ.
pub fn kraus_set(lattice: &TwoQubitDensity, phase: InteractionPhase) -> Result<KrausSet> {
    let eig = hermitian_eig(lattice.matrix())?;
    let min = eig.min_value();
    if min < -NEGATIVE_EIGENVALUE_TOL {
        return Err(Error::InvalidDensity(format!("lattice state has eigenvalue {min:e}")));
    }
    let w = build_w(phase);
    let mut operators = Vec::with_capacity(16);
    for (j, &lambda) in eig.values.iter().enumerate() {
        if lambda < KRAUS_EIGENVALUE_CUTOFF {
            continue;
        }
        let eta = eig.vector(j);
        let amp = lambda.sqrt();
        for i in 0..4 {
            let mut a = ComplexMatrix::zeros(4, 4);
            for m in 0..4 {
                for n in 0..4 {
                    let z: Complex64 = (0..4).map(|k| w[(4 * i + m, 4 * k + n)] * eta[k]).sum();
                    a[(m, n)] = z * amp;
                }
            }
            operators.push(a);
        }
    }
    KrausSet::new(operators)
}

/// ρ ↦ Σ A ρ A†, validated as a density matrix at [`CHANNEL_TOL`].
pub fn apply_channel(rho: &TwoQubitDensity, kraus: &KrausSet) -> Result<TwoQubitDensity> {
    let out = kraus
        .operators()
        .iter()
        .fold(ComplexMatrix::zeros(4, 4), |acc, k| &acc + &(&(k * rho.matrix()) * &k.adjoint()));
    TwoQubitDensity::with_tolerance(out.hermitian_part(), CHANNEL_TOL)
}

/// One point of a concurrence-versus-phase curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub phi: f64,
    pub concurrence: f64,
    pub negativity: f64,
    pub trace_error: f64,
}

/// Evenly spaced phases from `start` to `stop` inclusive; a single point yields `[start]`.
pub fn phase_grid(start: f64, stop: f64, points: usize) -> Vec<f64> {
    match points {
        0 => Vec::new(),
        1 => vec![start],
        n => (0..n).map(|k| start + (stop - start) * (k as f64 / (n - 1) as f64)).collect(),
    }
}

/// Evolves `initial` under the channel at every phase of `grid`. Points are
/// evaluated in parallel and returned in grid order.
pub fn concurrence_sweep(
    lattice: &TwoQubitDensity,
    initial: &TwoQubitDensity,
    grid: &[f64],
) -> Result<Vec<SweepPoint>> {
    if grid.is_empty() {
        return Err(Error::InvalidSchedule("phase grid is empty".into()));
    }
    grid.par_iter()
        .map(|&phi| {
            let k = kraus_set(lattice, InteractionPhase(phi))?;
            let out = apply_channel(initial, &k)?;
            Ok(SweepPoint {
                phi,
                concurrence: concurrence(&out)?,
                negativity: negativity(&out)?,
                trace_error: out.trace_error(),
            })
        })
        .collect()
}

/// First grid point attaining the maximum concurrence.
pub fn curve_maximum(curve: &[SweepPoint]) -> Option<SweepPoint> {
    curve.iter().copied().fold(None, |best, p| match best {
        Some(b) if b.concurrence >= p.concurrence => Some(b),
        _ => Some(p),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn eq8_state() -> TwoQubitDensity {
        let mut m = ComplexMatrix::from_real_diagonal(&[2.0 / 8.0, 3.0 / 8.0, 3.0 / 8.0, 0.0]);
        m[(1, 2)] = c(-2.0 / 8.0, 0.0);
        m[(2, 1)] = c(-2.0 / 8.0, 0.0);
        TwoQubitDensity::new(m).unwrap()
    }

    /// exp(−iφH) by Taylor series, H = σ₋⊗σ₊ + σ₊⊗σ₋.
    fn series_unitary(phi: f64) -> ComplexMatrix {
        let mut h = ComplexMatrix::zeros(4, 4);
        h[(1, 2)] = c(1., 0.);
        h[(2, 1)] = c(1., 0.);
        let gen = h.scale(c(0., -phi));
        let mut term = ComplexMatrix::identity(4);
        let mut sum = ComplexMatrix::identity(4);
        for k in 1..200 {
            term = (&term * &gen).scale_real(1.0 / k as f64);
            sum = &sum + &term;
            if term.max_abs() < 1e-17 {
                break;
            }
        }
        sum
    }

    /// Materialized permutation |a c b d⟩ ↦ |a b c d⟩ from (−l, A, +l, B) to (−l, +l, A, B).
    fn permutation() -> ComplexMatrix {
        let mut p = ComplexMatrix::zeros(16, 16);
        for a in 0..2 {
            for c_ in 0..2 {
                for b in 0..2 {
                    for d in 0..2 {
                        let from = (a << 3) | (c_ << 2) | (b << 1) | d;
                        let to = (a << 3) | (b << 2) | (c_ << 1) | d;
                        p[(to, from)] = c(1., 0.);
                    }
                }
            }
        }
        p
    }

    #[test]
    fn interaction_unitary_matches_series() {
        for phi in [0.0, 0.3, FRAC_PI_2, 2.0, PI] {
            let u = interaction_unitary(InteractionPhase(phi));
            assert!(u.max_abs_diff(&series_unitary(phi)) < 1e-14, "phi = {phi}");
            assert!((&u.adjoint() * &u).max_abs_diff(&ComplexMatrix::identity(4)) < 1e-14);
        }
        assert_eq!(interaction_unitary(InteractionPhase(0.0)), ComplexMatrix::identity(4));
    }

    #[test]
    fn full_swap_at_half_pi() {
        let u = interaction_unitary(InteractionPhase(FRAC_PI_2));
        assert!((u[(2, 1)] - c(0., -1.)).norm() < 1e-15);
        assert!((u[(1, 2)] - c(0., -1.)).norm() < 1e-15);
        assert!(u[(1, 1)].norm() < 1e-15);
        let u = interaction_unitary(InteractionPhase(PI));
        assert!((u[(1, 1)] + c(1., 0.)).norm() < 1e-15 && u[(1, 2)].norm() < 1e-15);
    }

    #[test]
    fn w_matches_materialized_permutation() {
        let p = permutation();
        for phi in [0.0, 0.7, FRAC_PI_2, 2.9] {
            let u = interaction_unitary(InteractionPhase(phi));
            let oracle = &(&p * &u.kron(&u)) * &p.transpose();
            let w = build_w(InteractionPhase(phi));
            assert!(w.max_abs_diff(&oracle) < 1e-15);
            assert!((&w.adjoint() * &w).max_abs_diff(&ComplexMatrix::identity(16)) < 1e-13);
            assert_eq!(w[(0, 0)], c(1., 0.));
        }
        assert_eq!(build_w(InteractionPhase(0.0)), ComplexMatrix::identity(16));
    }

    #[test]
    fn w_moves_left_excitation_onto_a() {
        let w = build_w(InteractionPhase(FRAC_PI_2));
        // |10⟩_latt|00⟩_AB = index 8 ↦ −i |00⟩_latt|10⟩_AB = index 2
        assert!((w[(2, 8)] - c(0., -1.)).norm() < 1e-15);
        assert!(w[(8, 8)].norm() < 1e-15);
    }

    #[test]
    fn zero_phase_channel_is_identity() {
        let k = kraus_set(&eq8_state(), InteractionPhase(0.0)).unwrap();
        assert!(k.completeness_error() < 1e-14);
        for rho in [TwoQubitDensity::bell_phi_plus(), TwoQubitDensity::maximally_mixed()] {
            let out = apply_channel(&rho, &k).unwrap();
            assert!(out.matrix().max_abs_diff(rho.matrix()) < 1e-14);
        }
    }

    #[test]
    fn kraus_count_follows_lattice_rank() {
        let pure = TwoQubitDensity::bell_phi_plus();
        assert_eq!(kraus_set(&pure, InteractionPhase(0.4)).unwrap().len(), 4);
        // spectrum {5/8, 2/8, 1/8, 0}
        assert_eq!(kraus_set(&eq8_state(), InteractionPhase(0.4)).unwrap().len(), 12);
        assert_eq!(kraus_set(&TwoQubitDensity::maximally_mixed(), InteractionPhase(0.4)).unwrap().len(), 16);
    }

    #[test]
    fn swap_transfers_lattice_concurrence() {
        let k = kraus_set(&eq8_state(), InteractionPhase(FRAC_PI_2)).unwrap();
        let out = apply_channel(&TwoQubitDensity::ket00(), &k).unwrap();
        assert!((concurrence(&out).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn sweep_and_grid() {
        assert_eq!(phase_grid(0.0, 1.0, 1), vec![0.0]);
        let g = phase_grid(0.0, PI, 201);
        assert_eq!(g.len(), 201);
        assert_eq!(g[200], PI);
        assert_eq!(g[100], FRAC_PI_2);

        let curve = concurrence_sweep(&eq8_state(), &TwoQubitDensity::ket00(), &[0.0]).unwrap();
        assert_eq!(curve[0].concurrence, 0.0);
        assert!(concurrence_sweep(&eq8_state(), &TwoQubitDensity::ket00(), &[]).is_err());
    }

    #[test]
    fn curve_maximum_prefers_first() {
        let pt = |phi, c| SweepPoint { phi, concurrence: c, negativity: 0.0, trace_error: 0.0 };
        let m = curve_maximum(&[pt(0.0, 0.1), pt(1.0, 0.5), pt(2.0, 0.5)]).unwrap();
        assert_eq!(m.phi, 1.0);
        assert!(curve_maximum(&[]).is_none());
    }

    #[test]
    fn rejects_invalid_kraus_shapes() {
        assert!(KrausSet::new(vec![ComplexMatrix::identity(2)]).is_err());
    }
}
