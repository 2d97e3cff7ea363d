use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use super::abm::check_dims;
use super::{Method, PerturbationSpec, Trajectory, TrajectoryMeta};
use crate::error::{Error, Result};
use crate::matfun::{ml_matrix, FracSystem, SpectralData};
use crate::norm::VectorNorm;
use crate::quad::{KernelTable, TimeGrid};
use crate::special_fn::MlParams;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 200;

/// Discretized variation-of-constants operator
/// `T(xi)(t) = E_alpha(t^alpha A) x0 + int_0^t (t-s)^{alpha-1} E_{alpha,alpha}((t-s)^alpha A) f(s, xi(s)) ds`
/// on a fixed grid.
///
/// The forcing is interpolated piecewise-linearly and the whole kernel is
/// integrated exactly against it. With the primitives
/// `P(u) = u^alpha E_{alpha,alpha+1}(u^alpha A)` and
/// `Q(u) = u^{alpha+1} E_{alpha,alpha+2}(u^alpha A)`, integration by parts gives
/// `int_0^{t_n} = P(t_n) g_0 + sum_j [Q(t_n - t_j) - Q(t_n - t_{j+1})] (g_{j+1} - g_j) / h_j`.
/// Sampling the kernel inside a trapezoidal rule instead would miss its own
/// `(t-s)^alpha` behaviour at `s = t` and cap the order at `2 alpha`.
pub struct LyapunovPerronOperator {
    grid: TimeGrid,
    free: Vec<DVector<f64>>,
    primitive: Vec<DMatrix<f64>>,
    increments: Increments,
}

enum Increments {
    /// `Q((m+1) h) - Q(m h)` by lag on uniform grids.
    ByLag(Vec<DMatrix<f64>>),
    /// `Q(t_n - t_j)` for all pairs.
    Pairwise(KernelTable),
}

/// The primitives `P(u) = u^alpha E_{alpha,alpha+1}(u^alpha A)` and
/// `Q(u) = u^{alpha+1} E_{alpha,alpha+2}(u^alpha A)` of the kernel
/// `u^{alpha-1} E_{alpha,alpha}(u^alpha A)`.
pub(crate) struct KernelPrimitives<'a> {
    spec: &'a SpectralData,
    alpha: f64,
    p: MlParams,
    q: MlParams,
}

impl<'a> KernelPrimitives<'a> {
    pub(crate) fn new(sys: &'a FracSystem) -> Result<Self> {
        let a = sys.alpha().value();
        Ok(KernelPrimitives {
            spec: sys.spectral(),
            alpha: a,
            p: MlParams::new(a, a + 1.0)?,
            q: MlParams::new(a, a + 2.0)?,
        })
    }

    pub(crate) fn p(&self, u: f64) -> Result<DMatrix<f64>> {
        Ok(ml_matrix(self.p, u, self.spec)? * u.powf(self.alpha))
    }

    pub(crate) fn q(&self, u: f64) -> Result<DMatrix<f64>> {
        Ok(ml_matrix(self.q, u, self.spec)? * u.powf(self.alpha + 1.0))
    }
}

impl LyapunovPerronOperator {
    pub fn new(sys: &FracSystem, x0: &DVector<f64>, grid: &TimeGrid) -> Result<Self> {
        let prim = KernelPrimitives::new(sys)?;
        let nodes = grid.nodes();
        let free = nodes.iter().map(|&t| sys.propagate(t, x0)).collect::<Result<Vec<_>>>()?;
        let primitive = nodes.iter().map(|&t| prim.p(t)).collect::<Result<Vec<_>>>()?;
        let increments = match grid.step() {
            Some(h) => {
                let q = (0..nodes.len()).map(|m| prim.q(m as f64 * h)).collect::<Result<Vec<_>>>()?;
                Increments::ByLag(q.windows(2).map(|w| &w[1] - &w[0]).collect())
            }
            None => Increments::Pairwise(KernelTable::build(grid, sys.dim(), |u| prim.q(u))?),
        };
        Ok(LyapunovPerronOperator {
            grid: grid.clone(),
            free,
            primitive,
            increments,
        })
    }

    pub fn grid(&self) -> &TimeGrid {
        &self.grid
    }

    /// The unperturbed solution `E_alpha(t^alpha A) x0` on the grid.
    pub fn free_solution(&self) -> &[DVector<f64>] {
        &self.free
    }

    /// The integral term applied to the samples `g(t_j)`.
    pub fn convolve(&self, g: &[DVector<f64>]) -> Result<Vec<DVector<f64>>> {
        let nodes = self.grid.nodes();
        if g.len() != nodes.len() {
            return Err(Error::DimensionMismatch {
                expected: nodes.len(),
                found: g.len(),
            });
        }
        let d = self.primitive[0].nrows();
        if let Some(bad) = g.iter().find(|v| v.len() != d) {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: bad.len(),
            });
        }
        let slopes = self.slopes(g);
        Ok((0..nodes.len()).map(|n| self.node(n, &g[0], &slopes)).collect())
    }

    fn slopes(&self, g: &[DVector<f64>]) -> Vec<DVector<f64>> {
        let nodes = self.grid.nodes();
        g.windows(2)
            .enumerate()
            .map(|(j, w)| (&w[1] - &w[0]) / (nodes[j + 1] - nodes[j]))
            .collect()
    }

    fn node(&self, n: usize, g0: &DVector<f64>, slopes: &[DVector<f64>]) -> DVector<f64> {
        let mut acc = &self.primitive[n] * g0;
        for (j, slope) in slopes.iter().enumerate().take(n) {
            match &self.increments {
                Increments::ByLag(dq) => acc.gemv(1.0, &dq[n - j - 1], slope, 1.0),
                Increments::Pairwise(q) => {
                    q.accumulate(&mut acc, 1.0, n, j, slope);
                    q.accumulate(&mut acc, -1.0, n, j + 1, slope);
                }
            }
        }
        acc
    }

    /// `f(t_j, xi_j)` on the grid.
    pub fn forcing(&self, pert: &PerturbationSpec, xi: &[DVector<f64>]) -> Vec<DVector<f64>> {
        self.grid.nodes().iter().zip(xi).map(|(&t, x)| pert.apply(t, x)).collect()
    }

    pub fn apply(&self, pert: &PerturbationSpec, xi: &[DVector<f64>]) -> Result<Vec<DVector<f64>>> {
        let mut out = self.convolve(&self.forcing(pert, xi))?;
        for (o, f) in out.iter_mut().zip(&self.free) {
            *o += f;
        }
        Ok(out)
    }
}

fn sup_distance(a: &[DVector<f64>], b: &[DVector<f64>]) -> f64 {
    a.iter().zip(b).map(|(x, y)| VectorNorm::Max.vector(&(x - y))).fold(0.0, f64::max)
}

/// Picard iteration `xi^{k+1} = T(xi^k)` from the unperturbed solution,
/// stopped once the sup-norm of successive differences is at most `tol`.
pub fn lyapunov_perron_iterate(
    sys: &FracSystem,
    pert: &PerturbationSpec,
    x0: &DVector<f64>,
    grid: &TimeGrid,
    max_iter: usize,
    tol: f64,
) -> Result<Trajectory> {
    check_dims(sys, pert, x0)?;
    if max_iter == 0 || !(tol > 0.0) {
        return Err(Error::InvalidInput("need max_iter >= 1 and tol > 0".into()));
    }
    let op = LyapunovPerronOperator::new(sys, x0, grid)?;
    let mut xi = op.free_solution().to_vec();
    let mut meta = TrajectoryMeta::new(Method::LyapunovPerron);
    let mut last_diff: Option<f64> = None;
    for k in 1..=max_iter {
        let next = op.apply(pert, &xi)?;
        let diff = sup_distance(&next, &xi);
        xi = next;
        if !diff.is_finite() {
            return Err(Error::NoConvergence {
                iterations: k,
                last_ratio: f64::INFINITY,
            });
        }
        if let Some(prev) = last_diff {
            if prev > 0.0 {
                meta.contraction_ratios.push(diff / prev);
            }
        }
        last_diff = Some(diff);
        if diff <= tol {
            meta.iterations = k;
            return Ok(Trajectory::new(grid.clone(), 0, xi, meta));
        }
    }
    Err(Error::NoConvergence {
        iterations: max_iter,
        last_ratio: meta.contraction_ratios.last().copied().unwrap_or(f64::NAN),
    })
}

/// Defect of a trajectory in the variation-of-constants equation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Residual {
    /// `max_n ||xi(t_n) - T(xi)(t_n)||`.
    pub value: f64,
    /// Largest grid step.
    pub step: f64,
    /// Expected convergence order `min(2, 1 + alpha)`.
    pub order: f64,
    /// `value / step^order`.
    pub constant: f64,
}

/// Measures how far a Caputo trajectory is from being a fixed point of
/// the discretized operator, using its own first state as `x0`.
pub fn residual_check(traj: &Trajectory, sys: &FracSystem, pert: &PerturbationSpec) -> Result<Residual> {
    if traj.first_index() != 0 {
        return Err(Error::GridMismatch(
            "trajectory does not start at t = 0 (Riemann-Liouville solution?)".into(),
        ));
    }
    let x0 = &traj.states()[0];
    check_dims(sys, pert, x0)?;
    let order = (1.0 + sys.alpha().value()).min(2.0);
    let step = traj.grid().max_step();
    if traj.len() < 2 {
        return Ok(Residual {
            value: 0.0,
            step,
            order,
            constant: 0.0,
        });
    }
    let op = LyapunovPerronOperator::new(sys, x0, traj.grid())?;
    let image = op.apply(pert, traj.states())?;
    let value = sup_distance(&image, traj.states());
    Ok(Residual {
        value,
        step,
        order,
        constant: value / step.powf(order),
    })
}
