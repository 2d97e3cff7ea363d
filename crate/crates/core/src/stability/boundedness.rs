use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::norm::VectorNorm;
use crate::quad::TimeGrid;
use crate::solver::solve_abm;
use crate::special_fn::FracOrder;

/// Shortest horizon the probe accepts.
pub const MIN_PROBE_HORIZON: f64 = 100.0;
/// Allowed growth of the running sup from the first to the second half.
pub const GROWTH_TOLERANCE: f64 = 0.01;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundednessReport {
    pub per_basis_bounded: Vec<bool>,
    /// `sup_t ||x_i(t)||` over the grid.
    pub sup_norms: Vec<f64>,
    /// Sup over the second half of the horizon divided by the sup over the first.
    pub growth: Vec<f64>,
    /// All basis solutions look bounded. A finite-horizon heuristic: boundedness
    /// of `d` independent solutions is equivalent to stability.
    pub inferred_stable: bool,
    pub notes: Vec<String>,
}

/// Solves `D^alpha x = B(t) x` from each standard basis vector and flags a
/// solution as bounded when its sup over the second half of the horizon
/// exceeds the sup over the first half by less than 1%.
pub fn boundedness_probe<F>(
    b: F,
    dim: usize,
    alpha: FracOrder,
    grid: &TimeGrid,
    norm: VectorNorm,
) -> Result<BoundednessReport>
where
    F: Fn(f64) -> DMatrix<f64>,
{
    if grid.t_max() < MIN_PROBE_HORIZON {
        return Err(Error::InvalidInput(format!(
            "probe horizon {} is shorter than {MIN_PROBE_HORIZON}",
            grid.t_max()
        )));
    }
    let b0 = b(0.0);
    if b0.nrows() != dim || b0.ncols() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: b0.nrows(),
        });
    }
    let half = 0.5 * grid.t_max();
    let mut report = BoundednessReport {
        per_basis_bounded: Vec::with_capacity(dim),
        sup_norms: Vec::with_capacity(dim),
        growth: Vec::with_capacity(dim),
        inferred_stable: true,
        notes: Vec::new(),
    };
    for i in 0..dim {
        let x0 = DVector::from_fn(dim, |k, _| if k == i { 1.0 } else { 0.0 });
        match solve_abm(alpha, |t, x| b(t) * x, &x0, grid, 1) {
            Ok(traj) => {
                let (mut first, mut second) = (0.0f64, 0.0f64);
                for (&t, s) in traj.times().iter().zip(traj.states()) {
                    let v = norm.vector(s);
                    if t <= half {
                        first = first.max(v);
                    } else {
                        second = second.max(v);
                    }
                }
                let growth = second / first;
                let bounded = growth.is_finite() && growth < 1.0 + GROWTH_TOLERANCE;
                report.per_basis_bounded.push(bounded);
                report.sup_norms.push(first.max(second));
                report.growth.push(growth);
            }
            Err(e) => {
                report.per_basis_bounded.push(false);
                report.sup_norms.push(f64::INFINITY);
                report.growth.push(f64::INFINITY);
                report.notes.push(format!("basis vector {i}: {e}"));
            }
        }
    }
    report.inferred_stable = report.per_basis_bounded.iter().all(|&b| b);
    Ok(report)
}
