//! Experiment runners. Each returns its CSV artifacts in memory; writing them
//! out is left to [`Report::write_to`].

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use qwalk_core::channel::curve_maximum;
use qwalk_core::csv_io::{self, fmt_real};
use qwalk_core::localization::{peak_drift, window_mass, DEFAULT_MAX_DROP};
use qwalk_core::spatial::PairDensity;
use qwalk_core::{
    concurrence, concurrence_sweep, negativity, two_site_density, SweepPoint, TwoQubitDensity, WalkState,
};

use crate::config::{ExperimentConfig, ExperimentKind, InitialState, WalkConfig};
use crate::error::CliError;

/// Half-width of the windows reported around the pair sites.
pub const WINDOW_HALF_WIDTH: usize = 10;

pub const MAXIMA_HEADER: &str = "curve,phi,concurrence";
pub const PAIR_SUMMARY_HEADER: &str = "a,b,concurrence,negativity,min_pt_eigenvalue,entangled";
pub const WINDOW_HEADER: &str = "step,center,half_width,mass,clipped";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Artifact {
    pub name: String,
    pub contents: Vec<u8>,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub artifacts: Vec<Artifact>,
    /// Short human-readable findings printed after a run.
    pub notes: Vec<String>,
}

impl Report {
    fn push(&mut self, name: impl Into<String>, f: impl FnOnce(&mut Vec<u8>) -> std::io::Result<()>) {
        let mut contents = Vec::new();
        f(&mut contents).expect("writing to memory");
        self.artifacts.push(Artifact { name: name.into(), contents });
    }

    pub fn artifact(&self, name: &str) -> Option<&Artifact> {
        self.artifacts.iter().find(|a| a.name == name)
    }

    /// Writes every artifact into `dir`, creating it if needed. Returns the written paths.
    pub fn write_to(&self, dir: &Path) -> Result<Vec<PathBuf>, CliError> {
        fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
        let mut paths = Vec::new();
        for a in &self.artifacts {
            let path = dir.join(&a.name);
            let mut f = fs::File::create(&path).map_err(|e| CliError::io(&path, e))?;
            f.write_all(&a.contents).map_err(|e| CliError::io(&path, e))?;
            paths.push(path);
        }
        Ok(paths)
    }
}

pub fn run(cfg: &ExperimentConfig) -> Result<Report, CliError> {
    cfg.validate()?;
    match cfg.kind {
        ExperimentKind::Walk => run_walk(cfg),
        ExperimentKind::Pair => run_pair(cfg),
        ExperimentKind::Transfer => run_transfer(cfg),
        ExperimentKind::Localize => run_localize(cfg, "localize"),
        ExperimentKind::Fig2 => run_fig2(cfg),
        ExperimentKind::Fig3 => run_localize(cfg, "fig3"),
        ExperimentKind::Fig4 => run_fig4(cfg),
    }
}

/// Evolves the symmetric initial coin state at the origin under the walk's schedule,
/// calling `on_shift` after every shift.
fn evolve(walk: &WalkConfig, seed: u64, on_shift: impl FnMut(usize, &WalkState)) -> Result<WalkState, CliError> {
    let sched = walk.schedule(seed)?;
    let mut state = WalkState::symmetric_initial(sched.shift_count().max(1));
    state.evolve_with(&sched, on_shift)?;
    Ok(state)
}

fn pair_density(cfg: &ExperimentConfig, state: &WalkState) -> Result<PairDensity, CliError> {
    let p = cfg.pair_or_default();
    Ok(two_site_density(state, p.a, p.b)?)
}

fn sweep(cfg: &ExperimentConfig, lattice: &TwoQubitDensity, init: &InitialState) -> Result<Vec<SweepPoint>, CliError> {
    Ok(concurrence_sweep(lattice, &init.density()?, &cfg.grid.phases())?)
}

fn push_maxima(report: &mut Report, name: &str, curves: &[(&str, Vec<SweepPoint>)]) {
    let mut rows = Vec::new();
    for (label, curve) in curves {
        let m = curve_maximum(curve).expect("non-empty grid");
        report.notes.push(format!("{label}: max concurrence {:.6e} at phi = {:.6}", m.concurrence, m.phi));
        rows.push(format!("{label},{},{}", fmt_real(m.phi), fmt_real(m.concurrence)));
    }
    report.push(name, |w| {
        writeln!(w, "{MAXIMA_HEADER}")?;
        rows.iter().try_for_each(|r| writeln!(w, "{r}"))
    });
}

fn run_walk(cfg: &ExperimentConfig) -> Result<Report, CliError> {
    let state = evolve(&cfg.walk_or_default(), cfg.seed, |_, _| {})?;
    let mut report = Report::default();
    report.notes.push(format!("norm drift {:.3e}", (state.norm_sqr() - 1.0).abs()));
    report.push("walk_state.csv", |w| csv_io::write_state(w, &state));
    let dist = state.position_distribution();
    let steps = cfg.walk_or_default().schedule(cfg.seed)?.shift_count();
    report.push("walk_distribution.csv", |w| csv_io::write_distributions(w, &[(steps, dist)]));
    Ok(report)
}

fn run_pair(cfg: &ExperimentConfig) -> Result<Report, CliError> {
    let state = evolve(&cfg.walk_or_default(), cfg.seed, |_, _| {})?;
    let rho = pair_density(cfg, &state)?;
    let (a, b) = rho.sites();
    let conc = concurrence(rho.density())?;
    let neg = negativity(rho.density())?;
    let ppt = rho.ppt_witness()?;
    let mut report = Report::default();
    report
        .notes
        .push(format!("sites ({a}, {b}): concurrence {conc:.6e}, negativity {neg:.6e}, entangled {}", ppt.entangled));
    report.push("pair_density.csv", |w| csv_io::write_pair_density(w, &rho));
    report.push("pair_summary.csv", |w| {
        writeln!(w, "{PAIR_SUMMARY_HEADER}")?;
        writeln!(
            w,
            "{a},{b},{},{},{},{}",
            fmt_real(conc),
            fmt_real(neg),
            fmt_real(ppt.min_pt_eigenvalue),
            ppt.entangled
        )
    });
    Ok(report)
}

fn run_transfer(cfg: &ExperimentConfig) -> Result<Report, CliError> {
    let state = evolve(&cfg.walk_or_default(), cfg.seed, |_, _| {})?;
    let rho = pair_density(cfg, &state)?;
    let init = cfg.initial_or_default();
    let curve = sweep(cfg, rho.density(), &init)?;
    let mut report = Report::default();
    report.push(format!("transfer_{}.csv", init.label()), |w| csv_io::write_sweep(w, &curve));
    push_maxima(&mut report, "transfer_maxima.csv", &[(init.label(), curve)]);
    Ok(report)
}

fn run_localize(cfg: &ExperimentConfig, prefix: &str) -> Result<Report, CliError> {
    let walk = cfg.walk_or_default();
    let total = walk.schedule(cfg.seed)?.shift_count();
    let steps = cfg.snapshots_or_default();
    if let Some(bad) = steps.iter().find(|&&s| s > total) {
        return Err(CliError::Config(format!("snapshot step {bad} exceeds the {total}-step schedule")));
    }
    let mut snapshots = Vec::new();
    if steps.contains(&0) {
        snapshots.push((0, WalkState::symmetric_initial(total.max(1)).position_distribution()));
    }
    evolve(&walk, cfg.seed, |n, s| {
        if steps.contains(&n) {
            snapshots.push((n, s.position_distribution()));
        }
    })?;
    if let Some((_, d)) = snapshots.iter().find(|(_, d)| (d.total() - 1.0).abs() > 1e-12) {
        return Err(CliError::Numerical(qwalk_core::Error::NotNormalized { norm_sqr: d.total() }));
    }

    let pair = cfg.pair_or_default();
    let mut rows = Vec::new();
    for (step, d) in &snapshots {
        for center in [pair.a, pair.b] {
            let m = window_mass(d, center, WINDOW_HALF_WIDTH);
            rows.push(format!("{step},{center},{WINDOW_HALF_WIDTH},{},{}", fmt_real(m.mass), m.clipped));
        }
    }

    let mut report = Report::default();
    if let Some((s1, d1)) = snapshots.last() {
        for (s0, d0) in &snapshots[..snapshots.len() - 1] {
            let d = peak_drift(d0, d1, (pair.a, pair.b), WINDOW_HALF_WIDTH, DEFAULT_MAX_DROP);
            report.notes.push(format!(
                "window mass around ({}, {}): {:.6} at step {s0}, {:.6} at step {s1}, drift {}",
                pair.a, pair.b, d.mass_before, d.mass_after, d.drift
            ));
        }
    }
    report.push(format!("{prefix}_distributions.csv"), |w| csv_io::write_distributions(w, &snapshots));
    report.push(format!("{prefix}_windows.csv"), |w| {
        writeln!(w, "{WINDOW_HEADER}")?;
        rows.iter().try_for_each(|r| writeln!(w, "{r}"))
    });
    Ok(report)
}

const FIG_INITIAL_STATES: [InitialState; 3] = [InitialState::Ket00, InitialState::Ket11, InitialState::BellPhiPlus];

fn run_fig2(cfg: &ExperimentConfig) -> Result<Report, CliError> {
    let state = evolve(&cfg.walk_or_default(), cfg.seed, |_, _| {})?;
    let rho = pair_density(cfg, &state)?;
    let mut report = Report::default();
    let mut curves = Vec::new();
    for init in &FIG_INITIAL_STATES {
        let curve = sweep(cfg, rho.density(), init)?;
        report.push(format!("fig2_{}.csv", init.label()), |w| csv_io::write_sweep(w, &curve));
        curves.push((init.label(), curve));
    }
    push_maxima(&mut report, "fig2_maxima.csv", &curves);
    Ok(report)
}

/// The localized state is taken after the two-phase schedule, extended by one
/// step when needed so that sites ±l carry amplitude (see
/// [`qwalk_core::ScheduleSpec::parity_aligned`]).
fn run_fig4(cfg: &ExperimentConfig) -> Result<Report, CliError> {
    let walk = match cfg.walk_or_default().schedule_spec(cfg.seed) {
        Some(spec) => {
            let aligned = spec.parity_aligned();
            WalkConfig::TwoPhase {
                l: aligned.l,
                total_steps: aligned.total_steps,
                theta1: aligned.theta1,
                theta_set: aligned.theta_set,
            }
        }
        None => cfg.walk_or_default(),
    };
    let state = evolve(&walk, cfg.seed, |_, _| {})?;
    let rho = pair_density(cfg, &state)?;
    let mut report = Report::default();
    let steps = walk.schedule(cfg.seed)?.shift_count();
    let (a, b) = rho.sites();
    let gamma = rho.gamma().map_or_else(|| "undefined".to_string(), |g| format!("{:.6} {:+.6}i", g.re, g.im));
    report.notes.push(format!("lattice pair ({a}, {b}) after {steps} steps, gamma {gamma}"));
    let mut curves = Vec::new();
    for init in &FIG_INITIAL_STATES[..2] {
        let curve = sweep(cfg, rho.density(), init)?;
        report.push(format!("fig4_{}.csv", init.label()), |w| csv_io::write_sweep(w, &curve));
        curves.push((init.label(), curve));
    }
    report.push("fig4_pair_density.csv", |w| csv_io::write_pair_density(w, &rho));
    push_maxima(&mut report, "fig4_maxima.csv", &curves);
    Ok(report)
}
