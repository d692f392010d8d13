//! Two-phase coin schedules that park the walker around sites ±l.
//!
//! Phase one runs `l` steps with a small coin angle θ₁, sending two nearly
//! ballistic peaks to ±l while keeping some interference. Phase two draws each
//! step's angle uniformly from a small set (by default {π/4, π/2}); the random
//! alternation between a mixing coin and a pure flip holds the peaks in place.
//!
//! Phase-two draws come from ChaCha8 seeded with `seed_from_u64`, one draw per
//! step in step order, so the schedule for `n + 1` steps extends the one for `n`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::walk::{CoinParams, PositionDistribution, StepSchedule, WalkState};

pub const DEFAULT_L: usize = 95;
pub const DEFAULT_TOTAL_STEPS: usize = 200;
pub const DEFAULT_THETA1: f64 = PI / 36.0;
pub const DEFAULT_THETA_SET: [f64; 2] = [FRAC_PI_4, FRAC_PI_2];
pub const DEFAULT_SEED: u64 = 2010;

/// Default fractional loss of window mass above which peaks count as drifting.
pub const DEFAULT_MAX_DROP: f64 = 0.2;

#[derive(Debug, Clone, PartialEq)]
pub struct ScheduleSpec {
    /// Length of the small-angle phase; also the target sites ±l.
    pub l: usize,
    pub total_steps: usize,
    pub theta1: f64,
    pub theta_set: Vec<f64>,
    pub seed: u64,
}

impl Default for ScheduleSpec {
    fn default() -> Self {
        Self {
            l: DEFAULT_L,
            total_steps: DEFAULT_TOTAL_STEPS,
            theta1: DEFAULT_THETA1,
            theta_set: DEFAULT_THETA_SET.to_vec(),
            seed: DEFAULT_SEED,
        }
    }
}

impl ScheduleSpec {
    pub fn validate(&self) -> Result<()> {
        if self.total_steps < self.l {
            return Err(Error::InvalidSchedule(format!("total_steps {} < l {}", self.total_steps, self.l)));
        }
        if self.theta_set.is_empty() {
            return Err(Error::InvalidSchedule("theta_set is empty".into()));
        }
        Ok(())
    }

    /// After n shifts from the origin only sites j ≡ n (mod 2) carry amplitude,
    /// so ±l are empty when `total_steps − l` is odd. This returns the spec with
    /// one extra phase-two step in that case and unchanged otherwise.
    pub fn parity_aligned(&self) -> Self {
        let mut out = self.clone();
        if (self.total_steps + self.l) % 2 == 1 {
            out.total_steps += 1;
        }
        out
    }
}

/// Uniform index in `0..n` by rejection sampling on 64-bit draws.
fn uniform_index(rng: &mut impl RngCore, n: usize) -> usize {
    let bound = n as u64;
    let limit = u64::MAX - u64::MAX % bound;
    loop {
        let x = rng.next_u64();
        if x < limit {
            return (x % bound) as usize;
        }
    }
}

/// `l` steps of Coin(0, θ₁, 0)+Shift, then `total_steps − l` steps whose θ is drawn from `theta_set`.
pub fn two_phase_schedule(spec: &ScheduleSpec) -> Result<StepSchedule> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut sched = StepSchedule::default();
    for _ in 0..spec.l {
        sched.push_step(CoinParams::with_theta(spec.theta1));
    }
    for _ in spec.l..spec.total_steps {
        let theta = spec.theta_set[uniform_index(&mut rng, spec.theta_set.len())];
        sched.push_step(CoinParams::with_theta(theta));
    }
    Ok(sched)
}

/// Final state plus the distributions recorded after the requested step counts.
#[derive(Debug, Clone)]
pub struct LocalizedRun {
    pub state: WalkState,
    pub snapshots: Vec<(usize, PositionDistribution)>,
}

impl LocalizedRun {
    pub fn snapshot(&self, step: usize) -> Option<&PositionDistribution> {
        self.snapshots.iter().find(|(s, _)| *s == step).map(|(_, d)| d)
    }
}

/// Runs the two-phase schedule from the symmetric initial coin state at the origin.
pub fn run_two_phase(spec: &ScheduleSpec, snapshot_steps: &[usize]) -> Result<LocalizedRun> {
    let sched = two_phase_schedule(spec)?;
    let mut state = WalkState::symmetric_initial(sched.shift_count());
    let mut snapshots = Vec::new();
    if snapshot_steps.contains(&0) {
        snapshots.push((0, state.position_distribution()));
    }
    state.evolve_with(&sched, |n, st| {
        if snapshot_steps.contains(&n) {
            snapshots.push((n, st.position_distribution()));
        }
    })?;
    Ok(LocalizedRun { state, snapshots })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindowMass {
    pub mass: f64,
    /// Set when part of the window lies outside the lattice.
    pub clipped: bool,
}

/// Σ p(j) over |j − center| ≤ half_width.
pub fn window_mass(dist: &PositionDistribution, center: i64, half_width: usize) -> WindowMass {
    let hw = half_width as i64;
    let l = dist.half_width() as i64;
    let lo = center - hw;
    let hi = center + hw;
    WindowMass { mass: (lo.max(-l)..=hi.min(l)).map(|j| dist.prob(j)).sum(), clipped: lo < -l || hi > l }
}

/// Total mass in the union of windows of `half_width` around each center.
pub fn union_window_mass(dist: &PositionDistribution, centers: &[i64], half_width: usize) -> f64 {
    let hw = half_width as i64;
    dist.iter().filter(|(j, _)| centers.iter().any(|c| (j - c).abs() <= hw)).map(|(_, p)| p).sum()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeakDrift {
    pub mass_before: f64,
    pub mass_after: f64,
    pub drift: bool,
}

/// Compares the window mass around `centers` at two epochs; flags drift when
/// the later mass has dropped by more than `max_drop` of the earlier one.
pub fn peak_drift(
    before: &PositionDistribution,
    after: &PositionDistribution,
    centers: (i64, i64),
    half_width: usize,
    max_drop: f64,
) -> PeakDrift {
    let c = [centers.0, centers.1];
    let mass_before = union_window_mass(before, &c, half_width);
    let mass_after = union_window_mass(after, &c, half_width);
    PeakDrift { mass_before, mass_after, drift: mass_after < (1.0 - max_drop) * mass_before }
}
