//! Coined discrete-time walk of a single particle on the integer line.
//!
//! The coin basis is {|0⟩, |1⟩}; the shift moves the |0⟩ component one site to
//! the left and the |1⟩ component one site to the right. Evolution is driven by
//! a [`StepSchedule`], a flat list of coin and shift primitives, so both
//! "coin then shift" steps and literal operator strings such as `S C S C S`
//! are expressible.

use std::f64::consts::FRAC_PI_4;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::ComplexMatrix;

/// Tolerance on the normalization of user-supplied amplitudes.
pub const NORM_TOL: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Angles of the three-parameter U(2) coin
/// `[[e^{iξ} cos θ, e^{iζ} sin θ], [e^{-iζ} sin θ, -e^{-iξ} cos θ]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoinParams {
    pub xi: f64,
    pub theta: f64,
    pub zeta: f64,
}

impl CoinParams {
    pub const fn new(xi: f64, theta: f64, zeta: f64) -> Self {
        Self { xi, theta, zeta }
    }

    /// Coin with ξ = ζ = 0.
    pub const fn with_theta(theta: f64) -> Self {
        Self::new(0.0, theta, 0.0)
    }

    /// θ = π/4, giving (1/√2)[[1, 1], [1, -1]].
    pub const fn hadamard() -> Self {
        Self::with_theta(FRAC_PI_4)
    }

    /// Entries `[[u00, u01], [u10, u11]]`.
    pub fn entries(&self) -> [[Complex64; 2]; 2] {
        let (s, c) = self.theta.sin_cos();
        let e_xi = Complex64::from_polar(1.0, self.xi);
        let e_zeta = Complex64::from_polar(1.0, self.zeta);
        [[e_xi * c, e_zeta * s], [e_zeta.conj() * s, -e_xi.conj() * c]]
    }
}

/// The coin as a 2×2 matrix.
pub fn coin_matrix(p: &CoinParams) -> ComplexMatrix {
    let [[a, b], [c, d]] = p.entries();
    ComplexMatrix::new(2, 2, vec![a, b, c, d]).expect("2x2")
}

/// One evolution primitive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Step {
    Shift,
    Coin(CoinParams),
}

/// Ordered list of primitives, applied first to last.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct StepSchedule {
    steps: Vec<Step>,
}

impl StepSchedule {
    pub fn new(steps: Vec<Step>) -> Self {
        Self { steps }
    }

    /// `t` walk steps, each a coin followed by a shift.
    pub fn uniform(t: usize, coin: CoinParams) -> Self {
        let mut s = Self::default();
        for _ in 0..t {
            s.push_step(coin);
        }
        s
    }

    /// The literal three-step string `S (H⊗1) S (H⊗1) S`: three shifts, two coins.
    pub fn three_step_hadamard_fixture() -> Self {
        let h = Step::Coin(CoinParams::hadamard());
        Self::new(vec![Step::Shift, h, Step::Shift, h, Step::Shift])
    }

    /// Appends one coin-then-shift step.
    pub fn push_step(&mut self, coin: CoinParams) {
        self.steps.push(Step::Coin(coin));
        self.steps.push(Step::Shift);
    }

    pub fn push(&mut self, step: Step) {
        self.steps.push(step);
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of shifts, which is the lattice half-width needed to run the schedule from the origin.
    pub fn shift_count(&self) -> usize {
        self.steps.iter().filter(|s| matches!(s, Step::Shift)).count()
    }

    /// Coins in order of application.
    pub fn coins(&self) -> impl Iterator<Item = &CoinParams> {
        self.steps.iter().filter_map(|s| match s {
            Step::Coin(c) => Some(c),
            Step::Shift => None,
        })
    }
}

/// Pure state of the walker on sites −L..=L.
///
/// Amplitudes are stored per site as `(a₀(j), a₁(j))`, sites in increasing order.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkState {
    half_width: usize,
    amps: Vec<Complex64>,
}

impl WalkState {
    /// Coin state `(c0, c1)` at the origin, zero elsewhere.
    pub fn initial(c0: Complex64, c1: Complex64, half_width: usize) -> Result<Self> {
        let norm_sqr = c0.norm_sqr() + c1.norm_sqr();
        if (norm_sqr - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm_sqr });
        }
        let mut s = Self::zeros(half_width);
        let i = s.offset(0);
        s.amps[2 * i] = c0;
        s.amps[2 * i + 1] = c1;
        Ok(s)
    }

    /// `(|0⟩ + i|1⟩)/√2` at the origin.
    pub fn symmetric_initial(half_width: usize) -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Self::initial(Complex64::new(h, 0.0), Complex64::new(0.0, h), half_width).expect("normalized by construction")
    }

    /// Builds a state from per-site coin amplitudes listed for sites −L..=L.
    pub fn from_sites(half_width: usize, sites: &[[Complex64; 2]]) -> Result<Self> {
        if sites.len() != 2 * half_width + 1 {
            return Err(Error::ShapeMismatch {
                expected: format!("{} sites", 2 * half_width + 1),
                got: format!("{} sites", sites.len()),
            });
        }
        let s = Self { half_width, amps: sites.iter().flatten().copied().collect() };
        let norm_sqr = s.norm_sqr();
        if (norm_sqr - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(s)
    }

    fn zeros(half_width: usize) -> Self {
        Self { half_width, amps: vec![ZERO; 2 * (2 * half_width + 1)] }
    }

    pub fn half_width(&self) -> usize {
        self.half_width
    }

    /// Sites −L..=L.
    pub fn sites(&self) -> std::ops::RangeInclusive<i64> {
        let l = self.half_width as i64;
        -l..=l
    }

    pub fn contains(&self, site: i64) -> bool {
        site.unsigned_abs() as usize <= self.half_width
    }

    fn offset(&self, site: i64) -> usize {
        (site + self.half_width as i64) as usize
    }

    /// `(a₀(j), a₁(j))`, or an error for sites off the lattice.
    pub fn amplitudes(&self, site: i64) -> Result<[Complex64; 2]> {
        if !self.contains(site) {
            return Err(Error::SiteOutOfRange { site, half_width: self.half_width });
        }
        let i = self.offset(site);
        Ok([self.amps[2 * i], self.amps[2 * i + 1]])
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(Complex64::norm_sqr).sum()
    }

    /// Same state on a lattice of a different half-width. Shrinking fails if it would drop amplitude.
    pub fn resized(&self, half_width: usize) -> Result<Self> {
        let mut out = Self::zeros(half_width);
        for j in self.sites() {
            let [a0, a1] = self.amplitudes(j)?;
            if a0 == ZERO && a1 == ZERO {
                continue;
            }
            if !out.contains(j) {
                return Err(Error::SiteOutOfRange { site: j, half_width });
            }
            let i = out.offset(j);
            out.amps[2 * i] = a0;
            out.amps[2 * i + 1] = a1;
        }
        Ok(out)
    }

    /// Applies the coin at every site.
    pub fn apply_coin(&mut self, p: &CoinParams) {
        let [[u00, u01], [u10, u11]] = p.entries();
        for pair in self.amps.chunks_exact_mut(2) {
            let (a0, a1) = (pair[0], pair[1]);
            pair[0] = u00 * a0 + u01 * a1;
            pair[1] = u10 * a0 + u11 * a1;
        }
    }

    /// Conditional shift: a₀ moves to j−1, a₁ moves to j+1.
    ///
    /// Fails without modifying the state if amplitude would be pushed off the lattice.
    pub fn apply_shift(&mut self) -> Result<()> {
        let l = self.half_width as i64;
        let n_sites = 2 * self.half_width + 1;
        if self.amps[0] != ZERO {
            return Err(Error::BoundaryAmplitude { site: -l });
        }
        if self.amps[2 * n_sites - 1] != ZERO {
            return Err(Error::BoundaryAmplitude { site: l });
        }
        for i in 0..n_sites - 1 {
            self.amps[2 * i] = self.amps[2 * (i + 1)];
        }
        self.amps[2 * (n_sites - 1)] = ZERO;
        for i in (1..n_sites).rev() {
            self.amps[2 * i + 1] = self.amps[2 * (i - 1) + 1];
        }
        self.amps[1] = ZERO;
        Ok(())
    }

    pub fn apply(&mut self, step: &Step) -> Result<()> {
        match step {
            Step::Shift => self.apply_shift(),
            Step::Coin(p) => {
                self.apply_coin(p);
                Ok(())
            }
        }
    }

    /// Applies every primitive of the schedule in order.
    pub fn evolve(&mut self, schedule: &StepSchedule) -> Result<()> {
        self.evolve_with(schedule, |_, _| {})
    }

    /// Like [`evolve`](Self::evolve), calling `after_shift(n, state)` after the n-th shift.
    pub fn evolve_with(
        &mut self,
        schedule: &StepSchedule,
        mut after_shift: impl FnMut(usize, &WalkState),
    ) -> Result<()> {
        let mut shifts = 0;
        for step in schedule.steps() {
            self.apply(step)?;
            if matches!(step, Step::Shift) {
                shifts += 1;
                after_shift(shifts, self);
            }
        }
        Ok(())
    }

    /// Consuming form of [`evolve`](Self::evolve).
    pub fn evolved(mut self, schedule: &StepSchedule) -> Result<Self> {
        self.evolve(schedule)?;
        Ok(self)
    }

    pub fn position_distribution(&self) -> PositionDistribution {
        PositionDistribution {
            half_width: self.half_width,
            probs: self.amps.chunks_exact(2).map(|p| p[0].norm_sqr() + p[1].norm_sqr()).collect(),
        }
    }
}

/// Runs `schedule` from the symmetric initial coin state on a lattice sized to its shift count.
pub fn run_from_symmetric_origin(schedule: &StepSchedule) -> Result<WalkState> {
    WalkState::symmetric_initial(schedule.shift_count()).evolved(schedule)
}

/// p(j) = |a₀(j)|² + |a₁(j)|² over sites −L..=L.
#[derive(Debug, Clone, PartialEq)]
pub struct PositionDistribution {
    half_width: usize,
    probs: Vec<f64>,
}

impl PositionDistribution {
    pub fn new(half_width: usize, probs: Vec<f64>) -> Result<Self> {
        if probs.len() != 2 * half_width + 1 {
            return Err(Error::ShapeMismatch {
                expected: format!("{} sites", 2 * half_width + 1),
                got: format!("{} sites", probs.len()),
            });
        }
        Ok(Self { half_width, probs })
    }

    pub fn half_width(&self) -> usize {
        self.half_width
    }

    /// Probability at `site`; zero off the lattice.
    pub fn prob(&self, site: i64) -> f64 {
        if site.unsigned_abs() as usize > self.half_width {
            return 0.0;
        }
        self.probs[(site + self.half_width as i64) as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        let l = self.half_width as i64;
        self.probs.iter().enumerate().map(move |(i, &p)| (i as i64 - l, p))
    }

    pub fn total(&self) -> f64 {
        self.probs.iter().sum()
    }

    pub fn mean(&self) -> f64 {
        self.iter().map(|(j, p)| j as f64 * p).sum()
    }

    pub fn variance(&self) -> f64 {
        let m = self.mean();
        self.iter().map(|(j, p)| (j as f64 - m).powi(2) * p).sum()
    }
}
