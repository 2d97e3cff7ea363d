//! Orchestration of one experiment: run it, then write its files.

use std::path::PathBuf;

use fracstab::matfun::FracSystem;
use fracstab::quad::TimeGrid;
use fracstab::solver::{
    lyapunov_perron_iterate, residual_check, solve_abm_system, solve_linear_exact, PerturbationSpec, Residual,
    Trajectory, TrajectoryMeta,
};
use fracstab::special_fn::{ml, MlParams};
use fracstab::stability::{boundedness_probe, classify, BoundednessReport, ClassifyOptions, StabilityReport, Verdict};
use nalgebra::DVector;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::{ExperimentConfig, ExperimentKind, Format, GridConfig, SolveMethod};
use crate::counterexample::{counterexample_run, Counterexample};
use crate::decay::{decay_fit, DecayFit};
use crate::error::{CliError, EXIT_INCONCLUSIVE, EXIT_OK};
use crate::output::{to_json, write_atomic, Table};

/// Grid used by the long-horizon experiments when the config has none.
pub const DEFAULT_LONG_GRID: GridConfig = GridConfig {
    t_max: 200.0,
    n: 2000,
    grading: 1.0,
};

pub struct Outcome {
    pub exit_code: i32,
    pub files: Vec<PathBuf>,
    pub summary: String,
}

/// Everything an experiment produces before it is written out.
struct Artifacts {
    report: String,
    trajectory: Option<Table>,
    decay: Option<Table>,
    exit_code: i32,
    summary: String,
}

impl Artifacts {
    fn report<T: Serialize>(name: &str, body: &T, summary: String) -> Self {
        Artifacts {
            report: to_json(&Envelope { name, report: body }),
            trajectory: None,
            decay: None,
            exit_code: EXIT_OK,
            summary,
        }
    }
}

#[derive(Serialize)]
struct Envelope<'a, T> {
    name: &'a str,
    report: &'a T,
}

/// Runs the experiment described by `cfg` and writes its outputs into
/// `cfg.output.directory`.
pub fn run(cfg: &ExperimentConfig) -> Result<Outcome, CliError> {
    cfg.validate()?;
    let art = match &cfg.experiment {
        ExperimentKind::MlEval { beta, points } => ml_eval(cfg, *beta, points)?,
        ExperimentKind::Solve { .. } => solve(cfg)?,
        ExperimentKind::Analyze {
            q_mode,
            eps_ball,
            probe_points,
        } => {
            let opts = ClassifyOptions {
                q_mode: *q_mode,
                eps_ball: *eps_ball,
                seed: cfg.seed,
                probe_points: *probe_points,
            };
            analyze(cfg, &opts)?
        }
        ExperimentKind::DecayFit { t_min, t_max, per_decade } => {
            let fit = decay_fit(&cfg.frac_system()?, *t_min, *t_max, *per_decade)?;
            decay_artifacts(cfg, fit)
        }
        ExperimentKind::RobustDemo { .. } => robust_demo(cfg)?,
        ExperimentKind::Counterexample {
            lambda,
            x0,
            b,
            t_max,
            per_decade,
        } => {
            let ce = counterexample_run(cfg.order()?, *lambda, *x0, *b, *t_max, *per_decade)?;
            counterexample_artifacts(cfg, ce)
        }
        ExperimentKind::BoundednessProbe => boundedness(cfg)?,
    };
    let dir = &cfg.output.directory;
    let mut files = Vec::new();
    if cfg.output.wants(Format::Json) {
        files.push(write_atomic(dir, "report.json", &art.report)?);
    }
    if cfg.output.wants(Format::Csv) {
        if let Some(t) = &art.trajectory {
            files.push(write_atomic(dir, "trajectory.csv", &t.to_csv())?);
        }
        if let Some(t) = &art.decay {
            files.push(write_atomic(dir, "decay.csv", &t.to_csv())?);
        }
    }
    Ok(Outcome {
        exit_code: art.exit_code,
        files,
        summary: art.summary,
    })
}

fn grid_or(cfg: &ExperimentConfig, fallback: GridConfig) -> Result<TimeGrid, CliError> {
    cfg.grid.unwrap_or(fallback).build()
}

fn trajectory_table(traj: &Trajectory, sys_norm: fracstab::norm::VectorNorm) -> Table {
    let d = traj.dim();
    let mut header = vec!["t".to_string()];
    header.extend((1..=d).map(|i| format!("x{i}")));
    header.push("norm".into());
    let mut table = Table::new(header);
    for (t, x) in traj.times().iter().zip(traj.states()) {
        let mut row = Vec::with_capacity(d + 2);
        row.push(*t);
        row.extend(x.iter().copied());
        row.push(sys_norm.vector(x));
        table.rows.push(row);
    }
    table
}

#[derive(Serialize)]
struct MlValue {
    z: [f64; 2],
    value: [f64; 2],
}

#[derive(Serialize)]
struct MlReport {
    alpha: f64,
    beta: f64,
    values: Vec<MlValue>,
}

fn ml_eval(cfg: &ExperimentConfig, beta: f64, points: &[[f64; 2]]) -> Result<Artifacts, CliError> {
    let params = MlParams::new(cfg.system.alpha, beta)?;
    let values = points
        .iter()
        .map(|&[re, im]| {
            let v = ml(params, Complex64::new(re, im))?;
            Ok(MlValue {
                z: [re, im],
                value: [v.re, v.im],
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let summary = format!("evaluated E_{{{}, {beta}}} at {} points", cfg.system.alpha, values.len());
    Ok(Artifacts::report(
        &cfg.name,
        &MlReport {
            alpha: cfg.system.alpha,
            beta,
            values,
        },
        summary,
    ))
}

#[derive(Serialize)]
struct SolveReport<'a> {
    meta: &'a TrajectoryMeta,
    nodes: usize,
    t_max: f64,
    final_state: Vec<f64>,
    final_norm: f64,
    residual: Option<Residual>,
}

fn solve(cfg: &ExperimentConfig) -> Result<Artifacts, CliError> {
    let ExperimentKind::Solve {
        x0,
        method,
        corrector_sweeps,
        max_iter,
        tol,
    } = &cfg.experiment
    else {
        unreachable!("dispatched on kind")
    };
    let sys = cfg.frac_system()?;
    let grid = cfg
        .grid
        .ok_or_else(|| CliError::Input("solve needs a grid".into()))?
        .build()?;
    let x0 = DVector::from_column_slice(x0);
    let pert = &cfg.perturbation;
    let traj = match method {
        SolveMethod::Abm => solve_abm_system(&sys, pert, &x0, &grid, *corrector_sweeps)?,
        SolveMethod::LyapunovPerron => lyapunov_perron_iterate(&sys, pert, &x0, &grid, *max_iter, *tol)?,
        SolveMethod::Exact => {
            if *pert != PerturbationSpec::None {
                return Err(CliError::Input("the exact solver only handles unperturbed systems".into()));
            }
            solve_linear_exact(&sys, &x0, &grid)?
        }
    };
    let residual = residual_check(&traj, &sys, pert)?;
    let norm = sys.norm();
    let report = SolveReport {
        meta: &traj.meta,
        nodes: traj.len(),
        t_max: grid.t_max(),
        final_state: traj.last().iter().copied().collect(),
        final_norm: norm.vector(traj.last()),
        residual: Some(residual),
    };
    let summary = format!(
        "{:?}: {} nodes, final norm {:e}, residual {:e}",
        traj.meta.method,
        traj.len(),
        report.final_norm,
        residual.value
    );
    let mut art = Artifacts::report(&cfg.name, &report, summary);
    art.trajectory = Some(trajectory_table(&traj, norm));
    Ok(art)
}

fn analyze(cfg: &ExperimentConfig, opts: &ClassifyOptions) -> Result<Artifacts, CliError> {
    let report = classify(&cfg.frac_system()?, &cfg.perturbation, opts)?;
    let summary = format!(
        "verdict {:?}, q = {}",
        report.verdict,
        report.q.as_ref().map_or("n/a".into(), |q| q.value.to_string())
    );
    let mut art = Artifacts::report(&cfg.name, &report, summary);
    if report.verdict == Verdict::Inconclusive {
        art.exit_code = EXIT_INCONCLUSIVE;
    }
    Ok(art)
}

fn decay_artifacts(cfg: &ExperimentConfig, fit: DecayFit) -> Artifacts {
    let summary = format!(
        "slopes over the last decade: E_a {:.4}, E_aa {:.4}",
        fit.fitted_slope_ea, fit.fitted_slope_eaa
    );
    let mut art = Artifacts::report(&cfg.name, &fit, summary);
    art.decay = Some(fit.table());
    art
}

fn counterexample_artifacts(cfg: &ExperimentConfig, ce: Counterexample) -> Artifacts {
    let summary = format!("verdict {:?}, |x(T)| / |x(1)| = {:?}", ce.verdict, ce.growth_ratio);
    let mut art = Artifacts::report(&cfg.name, &ce, summary);
    art.trajectory = Some(ce.table());
    art
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DemoRun {
    pub x0: Vec<f64>,
    pub initial_norm: f64,
    pub final_norm: f64,
    pub ratio: f64,
    /// Largest norm along the trajectory.
    pub max_norm: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RobustDemo {
    pub classification: StabilityReport,
    pub certified: bool,
    pub t_max: f64,
    pub decay_ratio: f64,
    pub runs: Vec<DemoRun>,
    /// Every run ended below `decay_ratio` times its initial norm and
    /// stayed inside the `eps_ball`.
    pub passed: bool,
}

/// Initial states of norm `radius` with directions drawn from `rng`.
pub fn sample_initial_states(rng: &mut ChaCha8Rng, dim: usize, count: usize, radius: f64, sys: &FracSystem) -> Vec<DVector<f64>> {
    (0..count)
        .map(|_| loop {
            let v = DVector::from_fn(dim, |_, _| rng.gen_range(-1.0..1.0));
            let n = sys.norm().vector(&v);
            if n > 1e-3 {
                break v * (radius / n);
            }
        })
        .collect()
}

/// Classifies the system, then integrates from `initial_points` states of
/// norm `delta / 2` and checks that each decays by `decay_ratio` over the
/// grid. The first trajectory is returned for output.
pub fn robust_demo_run(cfg: &ExperimentConfig) -> Result<(RobustDemo, Option<Trajectory>), CliError> {
    let ExperimentKind::RobustDemo {
        initial_points,
        eps_ball,
        probe_points,
        decay_ratio,
    } = &cfg.experiment
    else {
        return Err(CliError::Input("not a robust-demo config".into()));
    };
    let sys = cfg.frac_system()?;
    let opts = ClassifyOptions {
        eps_ball: *eps_ball,
        seed: cfg.seed,
        probe_points: *probe_points,
        ..ClassifyOptions::default()
    };
    let classification = classify(&sys, &cfg.perturbation, &opts)?;
    let grid = grid_or(cfg, DEFAULT_LONG_GRID)?;
    let delta = classification.delta.filter(|d| *d > 0.0 && d.is_finite());
    let certified = matches!(
        classification.verdict,
        Verdict::RobustStable | Verdict::UniformSmallStable | Verdict::DecayingStable
    ) && delta.is_some();
    let mut runs = Vec::new();
    let mut first = None;
    if let Some(delta) = delta.filter(|_| certified) {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let norm = sys.norm();
        for x0 in sample_initial_states(&mut rng, sys.dim(), *initial_points, 0.5 * delta, &sys) {
            let traj = solve_abm_system(&sys, &cfg.perturbation, &x0, &grid, 1)?;
            let n0 = norm.vector(&x0);
            let nt = norm.vector(traj.last());
            runs.push(DemoRun {
                x0: x0.iter().copied().collect(),
                initial_norm: n0,
                final_norm: nt,
                ratio: nt / n0,
                max_norm: traj.norms(norm).into_iter().fold(0.0, f64::max),
            });
            first.get_or_insert(traj);
        }
    }
    let passed = certified && runs.iter().all(|r| r.ratio <= *decay_ratio && r.max_norm <= *eps_ball);
    Ok((
        RobustDemo {
            classification,
            certified,
            t_max: grid.t_max(),
            decay_ratio: *decay_ratio,
            runs,
            passed,
        },
        first,
    ))
}

fn robust_demo(cfg: &ExperimentConfig) -> Result<Artifacts, CliError> {
    let (demo, first) = robust_demo_run(cfg)?;
    let worst = demo.runs.iter().map(|r| r.ratio).fold(0.0, f64::max);
    let summary = format!(
        "verdict {:?}, {} runs, worst ratio {:e}, passed {}",
        demo.classification.verdict,
        demo.runs.len(),
        worst,
        demo.passed
    );
    let mut art = Artifacts::report(&cfg.name, &demo, summary);
    art.trajectory = first.map(|t| trajectory_table(&t, cfg.system.norm));
    Ok(art)
}

fn boundedness(cfg: &ExperimentConfig) -> Result<Artifacts, CliError> {
    let sys = cfg.frac_system()?;
    let grid = grid_or(cfg, DEFAULT_LONG_GRID)?;
    let d = sys.dim();
    let a = sys.matrix().matrix().clone();
    let pert = &cfg.perturbation;
    // validated as linear, so the matrix exists at every time
    let b = |t: f64| &a + pert.matrix_at(t, d).expect("linear perturbation");
    let report: BoundednessReport = boundedness_probe(b, d, sys.alpha(), &grid, sys.norm())?;
    let summary = format!(
        "bounded {:?}, inferred stable {}",
        report.per_basis_bounded, report.inferred_stable
    );
    Ok(Artifacts::report(&cfg.name, &report, summary))
}
