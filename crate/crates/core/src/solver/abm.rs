use nalgebra::DVector;

use super::{Method, PerturbationSpec, Trajectory, TrajectoryMeta};
use crate::error::{Error, Result};
use crate::matfun::FracSystem;
use crate::quad::{TimeGrid, WeightPlan};
use crate::special_fn::{rgamma, FracOrder};

/// Fractional Adams-Bashforth-Moulton scheme for `D^alpha x = field(t, x)`.
///
/// Works on the equivalent Volterra equation
/// `x(t) = x0 + (1/Gamma(alpha)) int_0^t (t - s)^{alpha-1} field(s, x(s)) ds`:
/// the predictor applies the product-rectangle rule to the history, and each
/// of the `corrector_sweeps` corrections the product-trapezoidal rule.
pub fn solve_abm<F>(
    alpha: FracOrder,
    mut field: F,
    x0: &DVector<f64>,
    grid: &TimeGrid,
    corrector_sweeps: usize,
) -> Result<Trajectory>
where
    F: FnMut(f64, &DVector<f64>) -> DVector<f64>,
{
    if corrector_sweeps == 0 {
        return Err(Error::InvalidInput("at least one corrector sweep is required".into()));
    }
    let plan = WeightPlan::new(grid, alpha);
    let scale = rgamma(alpha.value());
    let nodes = grid.nodes();
    let d = x0.len();
    let mut states = Vec::with_capacity(nodes.len());
    let mut rates = Vec::with_capacity(nodes.len());
    states.push(x0.clone());
    rates.push(field(0.0, x0));

    let mut pred = DVector::zeros(d);
    let mut hist = DVector::zeros(d);
    for n in 1..nodes.len() {
        let t = nodes[n];
        pred.fill(0.0);
        hist.fill(0.0);
        let mut w_self = 0.0;
        for j in 0..n {
            let w = plan.interval(n, j);
            pred.axpy(w.rect, &rates[j], 1.0);
            hist.axpy(w.left, &rates[j], 1.0);
            if j + 1 < n {
                hist.axpy(w.right, &rates[j + 1], 1.0);
            } else {
                w_self = w.right;
            }
        }
        let mut x = x0 + &pred * scale;
        if !x.iter().all(|v| v.is_finite()) {
            return Err(Error::NonFiniteState { t });
        }
        for _ in 0..corrector_sweeps {
            let f = field(t, &x);
            x = x0 + (&hist + f * w_self) * scale;
        }
        if !x.iter().all(|v| v.is_finite()) {
            return Err(Error::NonFiniteState { t });
        }
        rates.push(field(t, &x));
        states.push(x);
    }
    let mut meta = TrajectoryMeta::new(Method::Abm);
    meta.iterations = corrector_sweeps;
    Ok(Trajectory::new(grid.clone(), 0, states, meta))
}

/// Right-hand side `A x + f(t, x)`.
pub fn system_field<'a>(
    sys: &'a FracSystem,
    pert: &'a PerturbationSpec,
) -> impl Fn(f64, &DVector<f64>) -> DVector<f64> + 'a {
    move |t, x| sys.matrix().matrix() * x + pert.apply(t, x)
}

/// `solve_abm` for `D^alpha x = A x + f(t, x)`.
pub fn solve_abm_system(
    sys: &FracSystem,
    pert: &PerturbationSpec,
    x0: &DVector<f64>,
    grid: &TimeGrid,
    corrector_sweeps: usize,
) -> Result<Trajectory> {
    check_dims(sys, pert, x0)?;
    solve_abm(sys.alpha(), system_field(sys, pert), x0, grid, corrector_sweeps)
}

pub(super) fn check_dims(sys: &FracSystem, pert: &PerturbationSpec, x0: &DVector<f64>) -> Result<()> {
    if x0.len() != sys.dim() {
        return Err(Error::DimensionMismatch {
            expected: sys.dim(),
            found: x0.len(),
        });
    }
    pert.validate(sys.dim())
}
