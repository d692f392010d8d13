//! Entanglement between the occupation qubits of two lattice sites.
//!
//! A single walker `Σ_j |φ_j⟩ ⊗ |j⟩` is read in the occupation basis, where
//! `|j⟩` means "site j occupied, all others empty". Tracing out the coin and
//! every site except `a` and `b` leaves
//!
//! ```text
//! ρ_ab = (1 − p_a − p_b)|00⟩⟨00| + p_a|10⟩⟨10| + p_b|01⟩⟨01|
//!        + ⟨φ_b|φ_a⟩|10⟩⟨01| + ⟨φ_a|φ_b⟩|01⟩⟨10|
//! ```
//!
//! with `p_j = ‖φ_j‖²` and the first qubit belonging to site `a`. It is built
//! directly from the two coin vectors, never from the exponentially large
//! occupation-space state.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::measures::TwoQubitDensity;
use crate::numerics::{hermitian_eig, inner, ComplexMatrix, Subsystem};
use crate::walk::WalkState;

/// Minimum partial-transpose eigenvalue below which a state is reported entangled.
pub const PPT_THRESHOLD: f64 = 1e-12;

/// Unnormalized coin vector `|φ_j⟩ = (a₀(j), a₁(j))`.
pub fn site_coin_vector(state: &WalkState, site: i64) -> Result<[Complex64; 2]> {
    state.amplitudes(site)
}

/// Reduced occupation state of two lattice sites.
#[derive(Debug, Clone, PartialEq)]
pub struct PairDensity {
    sites: (i64, i64),
    p_a: f64,
    p_b: f64,
    coherence: Complex64,
    density: TwoQubitDensity,
}

impl PairDensity {
    /// Sites `(a, b)`; `a` is the first qubit.
    pub fn sites(&self) -> (i64, i64) {
        self.sites
    }

    pub fn p_a(&self) -> f64 {
        self.p_a
    }

    pub fn p_b(&self) -> f64 {
        self.p_b
    }

    /// ⟨φ_b|φ_a⟩, the |10⟩⟨01| entry.
    pub fn coherence(&self) -> Complex64 {
        self.coherence
    }

    /// Normalized overlap γ = ⟨φ_b|φ_a⟩ / √(p_a p_b), `None` when either site is empty.
    pub fn gamma(&self) -> Option<Complex64> {
        (self.p_a > 0.0 && self.p_b > 0.0).then(|| self.coherence / (self.p_a * self.p_b).sqrt())
    }

    pub fn density(&self) -> &TwoQubitDensity {
        &self.density
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        self.density.matrix()
    }

    pub fn ppt_witness(&self) -> Result<PptWitness> {
        ppt_witness(&self.density)
    }
}

/// Reduced density matrix of sites `a` and `b` in the occupation basis.
pub fn two_site_density(state: &WalkState, a: i64, b: i64) -> Result<PairDensity> {
    if a == b {
        return Err(Error::CoincidentSites(a));
    }
    let phi_a = state.amplitudes(a)?;
    let phi_b = state.amplitudes(b)?;
    let p_a = inner(&phi_a, &phi_a).re;
    let p_b = inner(&phi_b, &phi_b).re;
    let coherence = inner(&phi_b, &phi_a);

    let mut m = ComplexMatrix::from_real_diagonal(&[1.0 - p_a - p_b, p_b, p_a, 0.0]);
    m[(2, 1)] = coherence;
    m[(1, 2)] = coherence.conj();
    let density = TwoQubitDensity::new(m)?;
    Ok(PairDensity { sites: (a, b), p_a, p_b, coherence, density })
}

/// γ = ⟨φ_b|φ_a⟩ / √(p_a p_b); fails with [`Error::NoOverlap`] if a site is unoccupied.
pub fn overlap_gamma(state: &WalkState, a: i64, b: i64) -> Result<Complex64> {
    if a == b {
        return Err(Error::CoincidentSites(a));
    }
    let phi_a = state.amplitudes(a)?;
    let phi_b = state.amplitudes(b)?;
    let p_a = inner(&phi_a, &phi_a).re;
    let p_b = inner(&phi_b, &phi_b).re;
    if p_a == 0.0 {
        return Err(Error::NoOverlap(a));
    }
    if p_b == 0.0 {
        return Err(Error::NoOverlap(b));
    }
    Ok(inner(&phi_b, &phi_a) / (p_a * p_b).sqrt())
}

/// Outcome of the positive-partial-transpose test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PptWitness {
    pub entangled: bool,
    pub min_pt_eigenvalue: f64,
}

/// PPT test; exact for two qubits.
pub fn ppt_witness(rho: &TwoQubitDensity) -> Result<PptWitness> {
    let pt = rho.matrix().partial_transpose(Subsystem::Second)?;
    let min = hermitian_eig(&pt)?.min_value();
    Ok(PptWitness { entangled: min < -PPT_THRESHOLD, min_pt_eigenvalue: min })
}
