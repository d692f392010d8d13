//! Experiment runner for `qwalk-core`: declarative TOML configs in, CSV artifacts out.

pub mod config;
pub mod error;
pub mod experiments;

pub use config::{ExperimentConfig, ExperimentKind, GridConfig, InitialState, PairConfig, WalkConfig};
pub use error::CliError;
pub use experiments::{run, Artifact, Report};
