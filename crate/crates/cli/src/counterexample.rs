//! The scalar Riemann-Liouville system `D^alpha x = -lambda x + b x`.
//!
//! With `b = 2 lambda` the feedback term, although it vanishes at the
//! origin, turns a stable linear part into an exponentially growing one.

use fracstab::quad::TimeGrid;
use fracstab::solver::solve_rl_scalar_exact;
use fracstab::special_fn::FracOrder;
use fracstab::{Error, Result};
use serde::Serialize;

use crate::output::Table;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Diverges,
    Decays,
    Trivial,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub alpha: f64,
    pub lambda: f64,
    pub b: f64,
    pub x0: f64,
    /// `|x(1)|`.
    pub abs_at_one: f64,
    pub abs_final: f64,
    /// `|x(t_max)| / |x(1)|`; absent for the trivial solution.
    pub growth_ratio: Option<f64>,
    pub verdict: Verdict,
    #[serde(skip)]
    pub times: Vec<f64>,
    #[serde(skip)]
    pub values: Vec<f64>,
}

impl Counterexample {
    pub fn table(&self) -> Table {
        let mut t = Table::new(vec!["t".into(), "x".into(), "abs".into()]);
        t.rows = self.times.iter().zip(&self.values).map(|(&t, &x)| vec![t, x, x.abs()]).collect();
        t
    }
}

/// `0` followed by `per_decade` log-spaced nodes per decade from `1e-2`
/// up to `t_max`, with `t = 1` and `t_max` always present.
pub fn counterexample_grid(t_max: f64, per_decade: usize) -> Result<TimeGrid> {
    let pd = per_decade as f64;
    let mut nodes = vec![0.0];
    for k in 0.. {
        let t = 10f64.powf((k as f64 - 2.0 * pd) / pd);
        if t >= t_max {
            break;
        }
        nodes.push(t);
    }
    nodes.push(t_max);
    TimeGrid::from_nodes(nodes)
}

/// Evaluates the closed-form solution `t^{alpha-1} E_{alpha,alpha}((b - lambda) t^alpha) x0`
/// and classifies its behaviour over the last three samples. `b` defaults
/// to `2 lambda`.
pub fn counterexample_run(
    alpha: FracOrder,
    lambda: f64,
    x0: f64,
    b: Option<f64>,
    t_max: f64,
    per_decade: usize,
) -> Result<Counterexample> {
    if !(t_max > 1.0 && t_max.is_finite()) || per_decade == 0 {
        return Err(Error::InvalidInput("counterexample needs t_max > 1 and per_decade >= 1".into()));
    }
    let b = b.unwrap_or(2.0 * lambda);
    let grid = counterexample_grid(t_max, per_decade)?;
    let traj = solve_rl_scalar_exact(alpha, lambda, b, x0, &grid)?;
    let times = traj.times().to_vec();
    let values: Vec<f64> = traj.states().iter().map(|s| s[0]).collect();
    let abs: Vec<f64> = values.iter().map(|v| v.abs()).collect();
    let one = times.iter().position(|&t| t == 1.0).expect("grid contains t = 1");
    let (at_one, last) = (abs[one], abs[abs.len() - 1]);
    let tail = &abs[abs.len() - 3..];
    let verdict = if x0 == 0.0 {
        Verdict::Trivial
    } else if tail[0] < tail[1] && tail[1] < tail[2] && last > 1e3 * at_one {
        Verdict::Diverges
    } else if tail[0] > tail[1] && tail[1] > tail[2] && last < 0.1 * at_one {
        Verdict::Decays
    } else {
        Verdict::Inconclusive
    };
    Ok(Counterexample {
        alpha: alpha.value(),
        lambda,
        b,
        x0,
        abs_at_one: at_one,
        abs_final: last,
        growth_ratio: (x0 != 0.0).then(|| last / at_one),
        verdict,
        times,
        values,
    })
}
