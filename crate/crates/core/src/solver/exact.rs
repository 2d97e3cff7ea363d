use nalgebra::DVector;

use super::{Method, Trajectory, TrajectoryMeta};
use crate::error::{Error, Result};
use crate::matfun::FracSystem;
use crate::quad::TimeGrid;
use crate::special_fn::{ml_real, FracOrder};

/// `x(t_n) = E_alpha(t_n^alpha A) x0`, the solution of the unperturbed system.
pub fn solve_linear_exact(sys: &FracSystem, x0: &DVector<f64>, grid: &TimeGrid) -> Result<Trajectory> {
    if x0.len() != sys.dim() {
        return Err(Error::DimensionMismatch {
            expected: sys.dim(),
            found: x0.len(),
        });
    }
    let states = grid
        .nodes()
        .iter()
        .map(|&t| sys.propagate(t, x0))
        .collect::<Result<Vec<_>>>()?;
    Ok(Trajectory::new(grid.clone(), 0, states, TrajectoryMeta::new(Method::LinearExact)))
}

/// Closed-form solution `t^{alpha-1} E_{alpha,alpha}((b - lambda) t^alpha) x0`
/// of the scalar Riemann-Liouville equation `D^alpha x = (-lambda + b) x`.
///
/// The solution is singular at `t = 0`, so states start at the first
/// positive node.
pub fn solve_rl_scalar_exact(alpha: FracOrder, lambda: f64, b: f64, x0: f64, grid: &TimeGrid) -> Result<Trajectory> {
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(Error::InvalidInput(format!("lambda must be positive, got {lambda}")));
    }
    if !(b.is_finite() && x0.is_finite()) {
        return Err(Error::InvalidInput("b and x0 must be finite".into()));
    }
    let a = alpha.value();
    let params = alpha.ml_aa();
    let mut states = Vec::with_capacity(grid.len().saturating_sub(1));
    for &t in &grid.nodes()[1..] {
        let v = if x0 == 0.0 {
            0.0
        } else {
            t.powf(a - 1.0) * ml_real(params, (b - lambda) * t.powf(a))? * x0
        };
        if !v.is_finite() {
            return Err(Error::NonFiniteState { t });
        }
        states.push(DVector::from_element(1, v));
    }
    Ok(Trajectory::new(
        grid.clone(),
        1,
        states,
        TrajectoryMeta::new(Method::RiemannLiouvilleExact),
    ))
}
