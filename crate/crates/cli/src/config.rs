//! Declarative experiment configuration, stored as TOML.
//!
//! ```toml
//! schema_version = 1
//! kind = "fig4"
//! seed = 2010
//! output = "out"
//!
//! [walk]
//! type = "two-phase"
//! l = 95
//! total_steps = 200
//! theta1 = 0.08726646259971647
//! theta_set = [0.7853981633974483, 1.5707963267948966]
//!
//! [pair]
//! a = -95
//! b = 95
//!
//! [initial]
//! state = "ket00"
//!
//! [grid]
//! start = 0.0
//! stop = 3.141592653589793
//! points = 201
//! ```
//!
//! Every table is optional; missing ones fall back to the defaults of the
//! experiment kind.

use std::f64::consts::PI;
use std::path::PathBuf;

use qwalk_core::localization::{DEFAULT_L, DEFAULT_SEED, DEFAULT_THETA1, DEFAULT_THETA_SET, DEFAULT_TOTAL_STEPS};
use qwalk_core::{CoinParams, Complex64, ComplexMatrix, ScheduleSpec, StepSchedule, TwoQubitDensity};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

pub const DEFAULT_SNAPSHOTS: [usize; 4] = [95, 100, 150, 200];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExperimentKind {
    Walk,
    Pair,
    Localize,
    Transfer,
    Fig2,
    Fig3,
    Fig4,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub schema_version: u32,
    pub kind: ExperimentKind,
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default = "default_output")]
    pub output: PathBuf,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub walk: Option<WalkConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<PairConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub initial: Option<InitialState>,
    #[serde(default)]
    pub grid: GridConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub snapshots: Option<Vec<usize>>,
}

fn default_seed() -> u64 {
    DEFAULT_SEED
}

fn default_output() -> PathBuf {
    PathBuf::from("out")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case", deny_unknown_fields)]
pub enum WalkConfig {
    /// Three-step Hadamard walk, schedule S, H, S, H, S.
    Fixture,
    Uniform {
        steps: usize,
        #[serde(default)]
        xi: f64,
        #[serde(default = "hadamard_theta")]
        theta: f64,
        #[serde(default)]
        zeta: f64,
    },
    TwoPhase {
        #[serde(default = "default_l")]
        l: usize,
        #[serde(default = "default_total")]
        total_steps: usize,
        #[serde(default = "default_theta1")]
        theta1: f64,
        #[serde(default = "default_theta_set")]
        theta_set: Vec<f64>,
    },
}

fn hadamard_theta() -> f64 {
    std::f64::consts::FRAC_PI_4
}
fn default_l() -> usize {
    DEFAULT_L
}
fn default_total() -> usize {
    DEFAULT_TOTAL_STEPS
}
fn default_theta1() -> f64 {
    DEFAULT_THETA1
}
fn default_theta_set() -> Vec<f64> {
    DEFAULT_THETA_SET.to_vec()
}

impl WalkConfig {
    pub fn default_two_phase() -> Self {
        Self::TwoPhase {
            l: DEFAULT_L,
            total_steps: DEFAULT_TOTAL_STEPS,
            theta1: DEFAULT_THETA1,
            theta_set: DEFAULT_THETA_SET.to_vec(),
        }
    }

    pub fn schedule_spec(&self, seed: u64) -> Option<ScheduleSpec> {
        match self {
            Self::TwoPhase { l, total_steps, theta1, theta_set } => Some(ScheduleSpec {
                l: *l,
                total_steps: *total_steps,
                theta1: *theta1,
                theta_set: theta_set.clone(),
                seed,
            }),
            _ => None,
        }
    }

    pub fn schedule(&self, seed: u64) -> Result<StepSchedule, CliError> {
        Ok(match self {
            Self::Fixture => StepSchedule::three_step_hadamard_fixture(),
            Self::Uniform { steps, xi, theta, zeta } => {
                StepSchedule::uniform(*steps, CoinParams::new(*xi, *theta, *zeta))
            }
            Self::TwoPhase { .. } => qwalk_core::two_phase_schedule(&self.schedule_spec(seed).expect("two-phase"))
                .map_err(|e| CliError::Config(e.to_string()))?,
        })
    }

    /// Mirror pair the experiment looks at when none is configured.
    pub fn default_pair(&self) -> PairConfig {
        match self {
            Self::TwoPhase { l, .. } if *l > 0 => PairConfig { a: -(*l as i64), b: *l as i64 },
            _ => PairConfig { a: -1, b: 1 },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairConfig {
    pub a: i64,
    pub b: i64,
}

/// Initial state of the two external qubits.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "state", rename_all = "kebab-case", deny_unknown_fields)]
pub enum InitialState {
    Ket00,
    Ket11,
    BellPhiPlus,
    /// Row-major real and imaginary parts.
    Explicit {
        re: Box<[[f64; 4]; 4]>,
        im: Box<[[f64; 4]; 4]>,
    },
}

impl InitialState {
    pub fn label(&self) -> &'static str {
        match self {
            Self::Ket00 => "ket00",
            Self::Ket11 => "ket11",
            Self::BellPhiPlus => "bell-phi-plus",
            Self::Explicit { .. } => "explicit",
        }
    }

    pub fn density(&self) -> Result<TwoQubitDensity, CliError> {
        Ok(match self {
            Self::Ket00 => TwoQubitDensity::ket00(),
            Self::Ket11 => TwoQubitDensity::ket11(),
            Self::BellPhiPlus => TwoQubitDensity::bell_phi_plus(),
            Self::Explicit { re, im } => {
                let data = (0..16).map(|k| Complex64::new(re[k / 4][k % 4], im[k / 4][k % 4])).collect();
                let m = ComplexMatrix::new(4, 4, data).expect("4x4");
                TwoQubitDensity::new(m).map_err(|e| CliError::Config(format!("initial state: {e}")))?
            }
        })
    }

    pub fn parse_name(name: &str) -> Result<Self, CliError> {
        match name {
            "ket00" => Ok(Self::Ket00),
            "ket11" => Ok(Self::Ket11),
            "bell-phi-plus" => Ok(Self::BellPhiPlus),
            other => Err(CliError::Config(format!(
                "unknown initial state {other:?} (expected ket00, ket11 or bell-phi-plus)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub start: f64,
    pub stop: f64,
    pub points: usize,
}

impl Default for GridConfig {
    fn default() -> Self {
        Self { start: 0.0, stop: PI, points: 201 }
    }
}

impl GridConfig {
    pub fn phases(&self) -> Vec<f64> {
        qwalk_core::phase_grid(self.start, self.stop, self.points)
    }
}

impl ExperimentConfig {
    pub fn new(kind: ExperimentKind) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            kind,
            seed: DEFAULT_SEED,
            output: default_output(),
            walk: None,
            pair: None,
            initial: None,
            grid: GridConfig::default(),
            snapshots: None,
        }
    }

    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        let cfg: Self = toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(CliError::Config(format!(
                "unsupported schema_version {} (this build reads {SCHEMA_VERSION})",
                self.schema_version
            )));
        }
        if self.grid.points < 1 {
            return Err(CliError::Config("grid.points must be at least 1".into()));
        }
        if !(self.grid.start.is_finite() && self.grid.stop.is_finite()) {
            return Err(CliError::Config("grid bounds must be finite".into()));
        }
        if let Some(spec) = self.walk.as_ref().and_then(|w| w.schedule_spec(self.seed)) {
            spec.validate().map_err(|e| CliError::Config(e.to_string()))?;
        }
        if let Some(init) = &self.initial {
            init.density()?;
        }
        Ok(())
    }

    /// Walk to run: the configured one, else the kind's default.
    pub fn walk_or_default(&self) -> WalkConfig {
        self.walk.clone().unwrap_or_else(|| match self.kind {
            ExperimentKind::Localize | ExperimentKind::Fig3 | ExperimentKind::Fig4 => WalkConfig::default_two_phase(),
            _ => WalkConfig::Fixture,
        })
    }

    pub fn pair_or_default(&self) -> PairConfig {
        self.pair.unwrap_or_else(|| self.walk_or_default().default_pair())
    }

    pub fn initial_or_default(&self) -> InitialState {
        self.initial.clone().unwrap_or(InitialState::Ket00)
    }

    pub fn snapshots_or_default(&self) -> Vec<usize> {
        self.snapshots.clone().unwrap_or_else(|| DEFAULT_SNAPSHOTS.to_vec())
    }
}
