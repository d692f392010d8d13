//! Single-particle coined quantum walk on a line, the entanglement it builds
//! between pairs of lattice sites, and a Kraus channel that transfers that
//! entanglement onto two external qubits coupled to the sites.
//!
//! Modules, bottom up:
//!
//! - [`numerics`]: dense complex matrices, Kronecker products, partial trace
//!   and transpose, and a Jacobi eigensolver for small Hermitian matrices.
//! - [`walk`]: coin, shift and schedule-driven evolution of the walker.
//! - [`spatial`]: occupation-basis density matrix of two sites and the PPT test.
//! - [`measures`]: concurrence and negativity of two-qubit states.
//! - [`channel`]: interaction unitary, Kraus set and phase sweeps.
//! - [`localization`]: two-phase coin schedules that localize the walk at ±l.
//! - [`csv_io`]: CSV artifacts for states, densities, sweeps and distributions.
//!
//! Two-qubit operators always use the basis order {|00⟩, |01⟩, |10⟩, |11⟩}
//! with the left ket the first factor.

pub mod channel;
pub mod csv_io;
pub mod error;
pub mod localization;
pub mod measures;
pub mod numerics;
pub mod spatial;
pub mod walk;

pub use channel::{
    apply_channel, build_w, concurrence_sweep, interaction_unitary, kraus_set, phase_grid, InteractionPhase, KrausSet,
    SweepPoint,
};
pub use error::{Error, Result};
pub use localization::{two_phase_schedule, ScheduleSpec};
pub use measures::{concurrence, negativity, TwoQubitDensity};
pub use numerics::{hermitian_eig, Complex64, ComplexMatrix, EigenDecomposition, Subsystem};
pub use spatial::{overlap_gamma, ppt_witness, two_site_density, PairDensity, PptWitness};
pub use walk::{coin_matrix, CoinParams, PositionDistribution, Step, StepSchedule, WalkState};
