//! JSON experiment configuration.

use std::path::{Path, PathBuf};

use fracstab::matfun::{FracSystem, JordanBlock, SquareMatrix};
use fracstab::norm::VectorNorm;
use fracstab::quad::TimeGrid;
use fracstab::solver::PerturbationSpec;
use fracstab::special_fn::FracOrder;
use fracstab::stability::QMode;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub name: String,
    pub system: SystemConfig,
    #[serde(default = "no_perturbation")]
    pub perturbation: PerturbationSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridConfig>,
    pub experiment: ExperimentKind,
    #[serde(default)]
    pub output: OutputConfig,
    #[serde(default = "default_seed")]
    pub seed: u64,
}

fn no_perturbation() -> PerturbationSpec {
    PerturbationSpec::None
}

fn default_seed() -> u64 {
    DEFAULT_SEED
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemConfig {
    pub alpha: f64,
    /// Row-major entries. Only the scalar experiments (ml-eval and
    /// counterexample) may omit it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<SquareMatrix>,
    #[serde(default)]
    pub norm: VectorNorm,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jordan: Option<Vec<JordanBlock>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub t_max: f64,
    pub n: usize,
    /// Grading exponent `r` of `t_j = t_max (j / n)^r`; 1 is uniform.
    #[serde(default = "unit")]
    pub grading: f64,
}

fn unit() -> f64 {
    1.0
}

impl GridConfig {
    pub fn build(&self) -> Result<TimeGrid, CliError> {
        let grid = if self.grading == 1.0 {
            TimeGrid::uniform(self.t_max, self.n)
        } else {
            TimeGrid::graded(self.t_max, self.n, self.grading)
        };
        grid.map_err(CliError::from)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveMethod {
    Abm,
    LyapunovPerron,
    Exact,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ExperimentKind {
    MlEval {
        beta: f64,
        /// Complex arguments as `[re, im]`.
        points: Vec<[f64; 2]>,
    },
    Solve {
        x0: Vec<f64>,
        method: SolveMethod,
        #[serde(default = "one_sweep")]
        corrector_sweeps: usize,
        #[serde(default = "default_max_iter")]
        max_iter: usize,
        #[serde(default = "default_tol")]
        tol: f64,
    },
    Analyze {
        #[serde(default)]
        q_mode: QMode,
        #[serde(default = "unit")]
        eps_ball: f64,
        #[serde(default = "default_probe_points")]
        probe_points: usize,
    },
    DecayFit {
        #[serde(default = "decay_t_min")]
        t_min: f64,
        #[serde(default = "decay_t_max")]
        t_max: f64,
        #[serde(default = "default_per_decade")]
        per_decade: usize,
    },
    RobustDemo {
        #[serde(default = "default_initial_points")]
        initial_points: usize,
        #[serde(default = "unit")]
        eps_ball: f64,
        #[serde(default = "default_probe_points")]
        probe_points: usize,
        /// Required ratio `||x(T)|| / ||x0||` at the end of the grid.
        #[serde(default = "default_decay_ratio")]
        decay_ratio: f64,
    },
    Counterexample {
        #[serde(default = "unit")]
        lambda: f64,
        #[serde(default = "unit")]
        x0: f64,
        /// Feedback gain; defaults to `2 lambda`.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        b: Option<f64>,
        #[serde(default = "counterexample_t_max")]
        t_max: f64,
        #[serde(default = "default_per_decade")]
        per_decade: usize,
    },
    BoundednessProbe,
}

fn one_sweep() -> usize {
    1
}
fn default_max_iter() -> usize {
    fracstab::solver::DEFAULT_MAX_ITER
}
fn default_tol() -> f64 {
    fracstab::solver::DEFAULT_TOL
}
fn default_probe_points() -> usize {
    512
}
fn decay_t_min() -> f64 {
    1e3
}
fn decay_t_max() -> f64 {
    1e5
}
fn default_per_decade() -> usize {
    20
}
fn default_initial_points() -> usize {
    10
}
fn default_decay_ratio() -> f64 {
    0.1
}
fn counterexample_t_max() -> f64 {
    50.0
}

impl ExperimentKind {
    /// Name of the subcommand that runs this experiment.
    pub fn command(&self) -> &'static str {
        match self {
            ExperimentKind::MlEval { .. } => "ml-eval",
            ExperimentKind::Solve { .. } => "solve",
            ExperimentKind::Analyze { .. } => "analyze",
            ExperimentKind::DecayFit { .. } => "decay-fit",
            ExperimentKind::RobustDemo { .. } => "robust-demo",
            ExperimentKind::Counterexample { .. } => "counterexample",
            ExperimentKind::BoundednessProbe => "boundedness",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputConfig {
    #[serde(default = "default_directory")]
    pub directory: PathBuf,
    #[serde(default = "all_formats")]
    pub formats: Vec<Format>,
}

fn default_directory() -> PathBuf {
    PathBuf::from("out")
}

fn all_formats() -> Vec<Format> {
    vec![Format::Json, Format::Csv]
}

impl Default for OutputConfig {
    fn default() -> Self {
        OutputConfig {
            directory: default_directory(),
            formats: all_formats(),
        }
    }
}

impl OutputConfig {
    pub fn wants(&self, f: Format) -> bool {
        self.formats.contains(&f)
    }
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let cfg: ExperimentConfig = serde_json::from_str(text).map_err(|e| CliError::Input(format!("config: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    /// Checks the schema constraints serde cannot express.
    pub fn validate(&self) -> Result<(), CliError> {
        let input = |m: String| Err(CliError::Input(m));
        if !(self.system.alpha > 0.0 && self.system.alpha < 1.0) {
            return input(format!("alpha must lie in (0, 1), got {}", self.system.alpha));
        }
        if let Some(g) = &self.grid {
            if g.n < 2 || !(g.t_max > 0.0 && g.t_max.is_finite()) || !(g.grading >= 1.0 && g.grading.is_finite()) {
                return input(format!(
                    "grid needs n >= 2, t_max > 0 and grading >= 1 (got n = {}, t_max = {}, grading = {})",
                    g.n, g.t_max, g.grading
                ));
            }
        }
        if self.output.formats.is_empty() {
            return input("output.formats is empty".into());
        }
        let needs_matrix = !matches!(
            self.experiment,
            ExperimentKind::Counterexample { .. } | ExperimentKind::MlEval { .. }
        );
        match &self.system.a {
            Some(a) => self.perturbation.validate(a.dim()).map_err(CliError::from)?,
            None if needs_matrix => return input("system.a is required for this experiment".into()),
            None => {}
        }
        match &self.experiment {
            ExperimentKind::Solve { x0, tol, max_iter, corrector_sweeps, .. } => {
                let d = self.system.a.as_ref().map_or(0, SquareMatrix::dim);
                if x0.len() != d {
                    return input(format!("x0 has {} components, A is {d} x {d}", x0.len()));
                }
                if !(*tol > 0.0) || *max_iter == 0 || *corrector_sweeps == 0 {
                    return input("tol, max_iter and corrector_sweeps must be positive".into());
                }
            }
            ExperimentKind::DecayFit { t_min, t_max, per_decade } => {
                if !(*t_min > 0.0 && t_max > t_min && t_max.is_finite()) || *per_decade < 2 {
                    return input("decay fit needs 0 < t_min < t_max and per_decade >= 2".into());
                }
            }
            ExperimentKind::RobustDemo { initial_points, eps_ball, decay_ratio, .. } => {
                if *initial_points == 0 || !(*eps_ball > 0.0) || !(*decay_ratio > 0.0) {
                    return input("initial_points, eps_ball and decay_ratio must be positive".into());
                }
            }
            ExperimentKind::Analyze { eps_ball, .. } if !(*eps_ball > 0.0) => {
                return input("eps_ball must be positive".into());
            }
            ExperimentKind::Counterexample { lambda, t_max, per_decade, .. } => {
                if !(*lambda > 0.0) || !(*t_max > 1.0) || *per_decade < 1 {
                    return input("counterexample needs lambda > 0, t_max > 1 and per_decade >= 1".into());
                }
            }
            ExperimentKind::BoundednessProbe if !self.perturbation.is_linear() => {
                return input("the boundedness probe needs a linear perturbation".into());
            }
            _ => {}
        }
        Ok(())
    }

    pub fn order(&self) -> Result<FracOrder, CliError> {
        FracOrder::new(self.system.alpha).map_err(CliError::from)
    }

    pub fn frac_system(&self) -> Result<FracSystem, CliError> {
        let a = self
            .system
            .a
            .clone()
            .ok_or_else(|| CliError::Input("system.a is required".into()))?;
        let alpha = self.order()?;
        let sys = match &self.system.jordan {
            Some(blocks) => FracSystem::with_jordan(alpha, a, self.system.norm, blocks),
            None => FracSystem::new(alpha, a, self.system.norm),
        };
        sys.map_err(CliError::from)
    }
}
