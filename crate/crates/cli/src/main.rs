use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fracstab::norm::VectorNorm;
use fracstab_cli::error::EXIT_INPUT;
use fracstab_cli::{run, ExperimentConfig};

#[derive(Parser)]
#[command(name = "fracstab", version, about = "Stability experiments for Caputo fractional systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the Mittag-Leffler function at the configured points.
    MlEval(Common),
    /// Integrate the perturbed system and write its trajectory.
    Solve(Common),
    /// Classify the system and write the certificate report.
    Analyze(Common),
    /// Fit the decay exponents of the matrix Mittag-Leffler functions.
    DecayFit(Common),
    /// Classify, then integrate from seeded initial states inside the certified ball.
    RobustDemo(Common),
    /// Run the Riemann-Liouville feedback counterexample.
    Counterexample(Common),
    /// Probe boundedness of the basis solutions of D^alpha x = B(t) x.
    Boundedness(Common),
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    config: PathBuf,
    /// Output directory; overrides the config.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum)]
    norm: Option<NormArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum NormArg {
    Max,
    Euclidean,
    One,
}

impl From<NormArg> for VectorNorm {
    fn from(n: NormArg) -> Self {
        match n {
            NormArg::Max => VectorNorm::Max,
            NormArg::Euclidean => VectorNorm::Euclidean,
            NormArg::One => VectorNorm::One,
        }
    }
}

impl Command {
    fn parts(&self) -> (&'static str, &Common) {
        match self {
            Command::MlEval(c) => ("ml-eval", c),
            Command::Solve(c) => ("solve", c),
            Command::Analyze(c) => ("analyze", c),
            Command::DecayFit(c) => ("decay-fit", c),
            Command::RobustDemo(c) => ("robust-demo", c),
            Command::Counterexample(c) => ("counterexample", c),
            Command::Boundedness(c) => ("boundedness", c),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, common) = cli.command.parts();
    let code = match execute(name, common) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("fracstab {name}: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}

fn execute(name: &str, common: &Common) -> Result<i32, fracstab_cli::CliError> {
    let mut cfg = ExperimentConfig::load(&common.config)?;
    if cfg.experiment.command() != name {
        eprintln!(
            "fracstab {name}: config describes a `{}` experiment",
            cfg.experiment.command()
        );
        return Ok(EXIT_INPUT);
    }
    if let Some(out) = &common.out {
        cfg.output.directory = out.clone();
    }
    if let Some(seed) = common.seed {
        cfg.seed = seed;
    }
    if let Some(norm) = common.norm {
        cfg.system.norm = norm.into();
    }
    let outcome = run(&cfg)?;
    eprintln!("{}: {}", cfg.name, outcome.summary);
    for f in &outcome.files {
        eprintln!("wrote {}", f.display());
    }
    Ok(outcome.exit_code)
}
