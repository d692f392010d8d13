use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qwalk_cli::{run, CliError, ExperimentConfig, ExperimentKind, InitialState, PairConfig, WalkConfig};

#[derive(Parser)]
#[command(name = "qwalk", version, about = "Coined quantum walk entanglement experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evolve a walk and dump the final state and distribution
    Walk(Overrides),
    /// Reduced density and entanglement of two lattice sites
    Pair(Overrides),
    /// Window masses and distributions of a two-phase localizing walk
    Localize(Overrides),
    /// Concurrence of the external qubits versus interaction phase
    Transfer(Overrides),
    /// Transfer curves from the three-step pair (-1, +1) for three initial states
    Fig2(Overrides),
    /// Distribution snapshots of the default localizing walk
    Fig3(Overrides),
    /// Transfer curves from the localized pair (-l, +l)
    Fig4(Overrides),
}

/// Flags override the matching config fields.
#[derive(Args)]
struct Overrides {
    /// TOML experiment config
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory
    #[arg(long)]
    output: Option<PathBuf>,
    /// Run a uniform walk with this many steps
    #[arg(long)]
    steps: Option<usize>,
    /// Coin angle for --steps (default π/4)
    #[arg(long, requires = "steps")]
    theta: Option<f64>,
    #[arg(long, allow_hyphen_values = true, requires = "b")]
    a: Option<i64>,
    #[arg(long, allow_hyphen_values = true, requires = "a")]
    b: Option<i64>,
    /// ket00, ket11 or bell-phi-plus
    #[arg(long)]
    initial: Option<String>,
    /// Number of phase grid points
    #[arg(long)]
    points: Option<usize>,
    /// Print the effective config as TOML and exit
    #[arg(long)]
    print_config: bool,
}

impl Command {
    fn split(self) -> (ExperimentKind, Overrides) {
        match self {
            Self::Walk(o) => (ExperimentKind::Walk, o),
            Self::Pair(o) => (ExperimentKind::Pair, o),
            Self::Localize(o) => (ExperimentKind::Localize, o),
            Self::Transfer(o) => (ExperimentKind::Transfer, o),
            Self::Fig2(o) => (ExperimentKind::Fig2, o),
            Self::Fig3(o) => (ExperimentKind::Fig3, o),
            Self::Fig4(o) => (ExperimentKind::Fig4, o),
        }
    }
}

fn effective_config(kind: ExperimentKind, o: &Overrides) -> Result<ExperimentConfig, CliError> {
    let mut cfg = match &o.config {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
            ExperimentConfig::from_toml(&text)?
        }
        None => ExperimentConfig::new(kind),
    };
    cfg.kind = kind;
    if let Some(seed) = o.seed {
        cfg.seed = seed;
    }
    if let Some(out) = &o.output {
        cfg.output = out.clone();
    }
    if let Some(steps) = o.steps {
        cfg.walk = Some(WalkConfig::Uniform {
            steps,
            xi: 0.0,
            theta: o.theta.unwrap_or(std::f64::consts::FRAC_PI_4),
            zeta: 0.0,
        });
    }
    if let (Some(a), Some(b)) = (o.a, o.b) {
        cfg.pair = Some(PairConfig { a, b });
    }
    if let Some(name) = &o.initial {
        cfg.initial = Some(InitialState::parse_name(name)?);
    }
    if let Some(points) = o.points {
        cfg.grid.points = points;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn execute(command: Command) -> Result<(), CliError> {
    let (kind, overrides) = command.split();
    let cfg = effective_config(kind, &overrides)?;
    if overrides.print_config {
        print!("{}", cfg.to_toml());
        return Ok(());
    }
    let report = run(&cfg)?;
    for path in report.write_to(&cfg.output)? {
        println!("wrote {}", path.display());
    }
    for note in &report.notes {
        println!("{note}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qwalk: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
