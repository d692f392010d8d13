//! Independent oracles and random generators shared by the integration tests.
//!
//! Nothing here calls the closed-form pair density, the Kraus construction or
//! the walk engine; each oracle recomputes its quantity from definitions.

#![allow(dead_code)]

use num_complex::Complex64;
use qwalk_core::numerics::{ComplexMatrix, Subsystem};
use qwalk_core::{CoinParams, TwoQubitDensity};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub struct TestRng(ChaCha8Rng);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        Self(ChaCha8Rng::seed_from_u64(seed))
    }

    /// Uniform in [0, 1).
    pub fn unit(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit()
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.unit() * n as f64) as usize % n
    }

    /// Standard normal via Box–Muller.
    pub fn normal(&mut self) -> f64 {
        let u1 = 1.0 - self.unit();
        let u2 = self.unit();
        (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
    }

    pub fn ket(&mut self, n: usize) -> Vec<Complex64> {
        let v: Vec<Complex64> = (0..n).map(|_| c(self.normal(), self.normal())).collect();
        let norm = v.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt();
        v.into_iter().map(|z| z / norm).collect()
    }

    /// Mixture of `k` random pure states with random weights.
    pub fn density(&mut self, k: usize) -> TwoQubitDensity {
        let weights: Vec<f64> = (0..k).map(|_| self.unit() + 1e-3).collect();
        let total: f64 = weights.iter().sum();
        let mut m = ComplexMatrix::zeros(4, 4);
        for w in weights {
            let v = self.ket(4);
            m = &m + &ComplexMatrix::outer(&v, &v).scale_real(w / total);
        }
        TwoQubitDensity::new(m).expect("random mixture is a density matrix")
    }

    /// Rank 1 to 4, uniformly.
    pub fn any_density(&mut self) -> TwoQubitDensity {
        let k = 1 + self.below(4);
        self.density(k)
    }

    pub fn coin(&mut self) -> CoinParams {
        let tau = 2.0 * std::f64::consts::PI;
        CoinParams::new(self.range(0.0, tau), self.range(0.0, tau), self.range(0.0, tau))
    }

    /// Random element of U(2): global phase times a three-parameter coin.
    pub fn unitary2(&mut self) -> ComplexMatrix {
        let phase = Complex64::from_polar(1.0, self.range(0.0, 6.3));
        qwalk_core::coin_matrix(&self.coin()).scale(phase)
    }
}

/// Tr_latt[W (ρ_latt ⊗ ρ_AB) W†], the unitary dilation behind the Kraus channel.
pub fn dilation_output(w: &ComplexMatrix, lattice: &ComplexMatrix, rho_ab: &ComplexMatrix) -> ComplexMatrix {
    let joint = lattice.kron(rho_ab);
    let evolved = &(w * &joint) * &w.adjoint();
    evolved.partial_trace(Subsystem::Second, (4, 4)).unwrap()
}

/// Walker state as a dense vector in coin ⊗ (occupation qubit per listed site),
/// coin most significant, `sites[0]` next, and so on.
///
/// `amplitude(j)` supplies the coin pair at site j; every basis vector with
/// exactly one occupied site carries that amplitude.
pub fn occupation_vector(sites: &[i64], amplitude: impl Fn(i64) -> [Complex64; 2]) -> Vec<Complex64> {
    let n = sites.len();
    let mut v = vec![c(0., 0.); 2usize << n];
    for (k, &j) in sites.iter().enumerate() {
        let [a0, a1] = amplitude(j);
        let occ = 1usize << (n - 1 - k);
        v[occ] = a0;
        v[(1 << n) | occ] = a1;
    }
    v
}

/// Reduced state of sites `a`, `b` (positions `ia`, `ib` in the site list) by
/// brute force: regroup the occupation vector as a 4 × rest matrix M with rows
/// indexed by (x_a, x_b) and return M M†.
pub fn brute_force_pair(v: &[Complex64], n_sites: usize, ia: usize, ib: usize) -> ComplexMatrix {
    let rest_bits = n_sites + 1 - 2;
    let mut m = ComplexMatrix::zeros(4, 1 << rest_bits);
    for (idx, &amp) in v.iter().enumerate() {
        if amp == c(0., 0.) {
            continue;
        }
        // bit positions counted from the most significant (coin = 0, site k = k + 1)
        let bit = |pos: usize| (idx >> (n_sites - pos)) & 1;
        let xa = bit(ia + 1);
        let xb = bit(ib + 1);
        let mut rest = 0usize;
        for pos in 0..=n_sites {
            if pos != ia + 1 && pos != ib + 1 {
                rest = (rest << 1) | bit(pos);
            }
        }
        m[((xa << 1) | xb, rest)] = amp;
    }
    &m * &m.adjoint()
}

/// Plain-array coin-then-shift walk, independent of the engine. Returns the
/// coin pairs for sites −t..=t after all steps, starting from `(c0, c1)` at the origin.
pub fn naive_walk(c0: Complex64, c1: Complex64, thetas: &[f64]) -> Vec<[Complex64; 2]> {
    let t = thetas.len();
    let n = 2 * t + 1;
    let mut psi = vec![[c(0., 0.); 2]; n];
    psi[t] = [c0, c1];
    for &theta in thetas {
        let (s, co) = theta.sin_cos();
        for p in psi.iter_mut() {
            let [a, b] = *p;
            *p = [a * co + b * s, a * s - b * co];
        }
        let mut next = vec![[c(0., 0.); 2]; n];
        for i in 0..n {
            if i > 0 {
                next[i - 1][0] = psi[i][0];
            }
            if i + 1 < n {
                next[i + 1][1] = psi[i][1];
            }
        }
        psi = next;
    }
    psi
}

/// θ sequence of the two-phase schedule, regenerated from the seed with
/// ChaCha8 + rejection sampling.
pub fn naive_two_phase_thetas(l: usize, total: usize, theta1: f64, set: &[f64], seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = set.len() as u64;
    let zone = u64::MAX - u64::MAX % bound;
    let mut out = vec![theta1; l];
    while out.len() < total {
        let x = rng.next_u64();
        if x < zone {
            out.push(set[(x % bound) as usize]);
        }
    }
    out
}

pub fn window(psi: &[[Complex64; 2]], center: i64, hw: i64) -> f64 {
    let t = (psi.len() / 2) as i64;
    (center - hw..=center + hw)
        .filter(|j| j.abs() <= t)
        .map(|j| {
            let [a, b] = psi[(j + t) as usize];
            a.norm_sqr() + b.norm_sqr()
        })
        .sum()
}
