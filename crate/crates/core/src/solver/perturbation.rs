use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matfun::SquareMatrix;
use crate::norm::VectorNorm;

/// Time profile `K_env(t) >= 0` of a nonlinear perturbation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "shape")]
pub enum Envelope {
    Constant,
    /// `(1 + t)^{-gamma}`.
    Decaying { gamma: f64 },
    /// Piecewise-linear through `(times[i], values[i])`, constant outside.
    Table { times: Vec<f64>, values: Vec<f64> },
}

impl Envelope {
    fn at(&self, t: f64) -> f64 {
        match self {
            Envelope::Constant => 1.0,
            Envelope::Decaying { gamma } => (1.0 + t).powf(-gamma),
            Envelope::Table { times, values } => interpolate(times, t, |i| values[i], |a, b, w| a + (b - a) * w),
        }
    }

    fn sup(&self) -> f64 {
        match self {
            Envelope::Constant | Envelope::Decaying { .. } => 1.0,
            Envelope::Table { values, .. } => values.iter().fold(0.0, |m, v| m.max(*v)),
        }
    }

    fn limit(&self) -> f64 {
        match self {
            Envelope::Constant => 1.0,
            Envelope::Decaying { .. } => 0.0,
            Envelope::Table { values, .. } => *values.last().unwrap(),
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            Envelope::Constant => Ok(()),
            Envelope::Decaying { gamma } => check_gamma(*gamma),
            Envelope::Table { times, values } => {
                check_times(times, values.len())?;
                if values.iter().any(|v| !(*v >= 0.0 && v.is_finite())) {
                    return Err(Error::InvalidInput("envelope values must be finite and nonnegative".into()));
                }
                Ok(())
            }
        }
    }
}

/// The perturbation `f(t, x)` of `D^alpha x = A x + f(t, x)`.
///
/// Linear kinds are `f = Q(t) x`. Nonlinear kinds are
/// `f = c K_env(t) tanh(x)` (componentwise), whose Lipschitz constant in
/// any of the supported norms is `|c| K_env(t)`, and `f(t, 0) = 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum PerturbationSpec {
    None,
    LinearConstant { q0: SquareMatrix },
    /// `Q(t) = q0 / (1 + t)^gamma`.
    LinearDecaying { q0: SquareMatrix, gamma: f64 },
    /// Piecewise-linear in time, constant outside the table.
    LinearTable { times: Vec<f64>, matrices: Vec<SquareMatrix> },
    NonlinearSaturating { c: f64, envelope: Envelope },
    /// `f = g(t) tanh(x)` with `g` piecewise-linear through the table.
    NonlinearTable { times: Vec<f64>, gains: Vec<f64> },
}

fn check_gamma(gamma: f64) -> Result<()> {
    if gamma > 0.0 && gamma.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("decay exponent must be positive, got {gamma}")))
    }
}

fn check_times(times: &[f64], n: usize) -> Result<()> {
    if times.is_empty() || times.len() != n {
        return Err(Error::InvalidInput(format!(
            "table needs matching non-empty columns ({} times, {n} values)",
            times.len()
        )));
    }
    if times.windows(2).any(|w| !(w[1] > w[0])) || times.iter().any(|t| !t.is_finite()) {
        return Err(Error::InvalidInput("table times must increase strictly".into()));
    }
    Ok(())
}

/// Linear interpolation in a table, clamped at both ends.
fn interpolate<T>(times: &[f64], t: f64, at: impl Fn(usize) -> T, mix: impl Fn(T, T, f64) -> T) -> T {
    let n = times.len();
    if t <= times[0] {
        return at(0);
    }
    if t >= times[n - 1] {
        return at(n - 1);
    }
    let i = times.partition_point(|&s| s <= t) - 1;
    let w = (t - times[i]) / (times[i + 1] - times[i]);
    mix(at(i), at(i + 1), w)
}

impl PerturbationSpec {
    pub fn kind_name(&self) -> &'static str {
        match self {
            PerturbationSpec::None => "None",
            PerturbationSpec::LinearConstant { .. } => "LinearConstant",
            PerturbationSpec::LinearDecaying { .. } => "LinearDecaying",
            PerturbationSpec::LinearTable { .. } => "LinearTable",
            PerturbationSpec::NonlinearSaturating { .. } => "NonlinearSaturating",
            PerturbationSpec::NonlinearTable { .. } => "NonlinearTable",
        }
    }

    /// True for `None` and the linear kinds.
    pub fn is_linear(&self) -> bool {
        !matches!(
            self,
            PerturbationSpec::NonlinearSaturating { .. } | PerturbationSpec::NonlinearTable { .. }
        )
    }

    /// Checks parameters and matrix dimensions against the state dimension.
    pub fn validate(&self, dim: usize) -> Result<()> {
        let check_dim = |m: &SquareMatrix| {
            if m.dim() == dim {
                Ok(())
            } else {
                Err(Error::DimensionMismatch {
                    expected: dim,
                    found: m.dim(),
                })
            }
        };
        match self {
            PerturbationSpec::None => Ok(()),
            PerturbationSpec::LinearConstant { q0 } => check_dim(q0),
            PerturbationSpec::LinearDecaying { q0, gamma } => {
                check_gamma(*gamma)?;
                check_dim(q0)
            }
            PerturbationSpec::LinearTable { times, matrices } => {
                check_times(times, matrices.len())?;
                matrices.iter().try_for_each(check_dim)
            }
            PerturbationSpec::NonlinearSaturating { c, envelope } => {
                if !c.is_finite() {
                    return Err(Error::InvalidInput("gain c must be finite".into()));
                }
                envelope.validate()
            }
            PerturbationSpec::NonlinearTable { times, gains } => {
                check_times(times, gains.len())?;
                if gains.iter().any(|g| !g.is_finite()) {
                    return Err(Error::InvalidInput("gains must be finite".into()));
                }
                Ok(())
            }
        }
    }

    /// `Q(t)` for the linear kinds (zero for `None`).
    pub fn matrix_at(&self, t: f64, dim: usize) -> Result<DMatrix<f64>> {
        match self {
            PerturbationSpec::None => Ok(DMatrix::zeros(dim, dim)),
            PerturbationSpec::LinearConstant { q0 } => Ok(q0.matrix().clone()),
            PerturbationSpec::LinearDecaying { q0, gamma } => Ok(q0.matrix() * (1.0 + t).powf(-gamma)),
            PerturbationSpec::LinearTable { times, matrices } => Ok(interpolate(
                times,
                t,
                |i| matrices[i].matrix().clone(),
                |a, b, w| &a + (&b - &a) * w,
            )),
            _ => Err(Error::WrongPerturbationKind { expected: "linear" }),
        }
    }

    /// Scalar gain of the nonlinear kinds.
    fn gain(&self, t: f64) -> f64 {
        match self {
            PerturbationSpec::NonlinearSaturating { c, envelope } => c * envelope.at(t),
            PerturbationSpec::NonlinearTable { times, gains } => {
                interpolate(times, t, |i| gains[i], |a, b, w| a + (b - a) * w)
            }
            _ => 0.0,
        }
    }

    /// `f(t, x)`.
    pub fn apply(&self, t: f64, x: &DVector<f64>) -> DVector<f64> {
        match self {
            PerturbationSpec::None => DVector::zeros(x.len()),
            PerturbationSpec::LinearConstant { q0 } => q0.matrix() * x,
            PerturbationSpec::LinearDecaying { q0, gamma } => q0.matrix() * x * (1.0 + t).powf(-gamma),
            PerturbationSpec::LinearTable { .. } => self.matrix_at(t, x.len()).expect("linear kind") * x,
            _ => x.map(f64::tanh) * self.gain(t),
        }
    }

    /// `lim_{t -> inf} Q(t)` for the linear kinds.
    pub fn limit_matrix(&self, dim: usize) -> Result<DMatrix<f64>> {
        match self {
            PerturbationSpec::None | PerturbationSpec::LinearDecaying { .. } => Ok(DMatrix::zeros(dim, dim)),
            PerturbationSpec::LinearConstant { q0 } => Ok(q0.matrix().clone()),
            PerturbationSpec::LinearTable { matrices, .. } => Ok(matrices.last().unwrap().matrix().clone()),
            _ => Err(Error::WrongPerturbationKind { expected: "linear" }),
        }
    }

    /// Jacobian `d f / d x` at `(t, x)`.
    pub fn jacobian(&self, t: f64, x: &DVector<f64>) -> DMatrix<f64> {
        if self.is_linear() {
            return self.matrix_at(t, x.len()).expect("linear kind");
        }
        let g = self.gain(t);
        DMatrix::from_diagonal(&x.map(|v| g / v.cosh().powi(2)))
    }

    /// Times where `K` has kinks (table nodes).
    pub fn breakpoints(&self) -> &[f64] {
        match self {
            PerturbationSpec::LinearTable { times, .. } | PerturbationSpec::NonlinearTable { times, .. } => times,
            PerturbationSpec::NonlinearSaturating {
                envelope: Envelope::Table { times, .. },
                ..
            } => times,
            _ => &[],
        }
    }

    /// Lipschitz envelope `K(t)`: `||Q(t)||` for linear kinds and the
    /// absolute gain for nonlinear kinds.
    pub fn lipschitz(&self, t: f64, norm: VectorNorm) -> f64 {
        match self {
            PerturbationSpec::None => 0.0,
            PerturbationSpec::LinearConstant { q0 } => norm.operator(q0.matrix()),
            PerturbationSpec::LinearDecaying { q0, gamma } => norm.operator(q0.matrix()) * (1.0 + t).powf(-gamma),
            PerturbationSpec::LinearTable { .. } => {
                norm.operator(&self.matrix_at(t, 0).expect("linear kind"))
            }
            _ => self.gain(t).abs(),
        }
    }

    /// `sup_t K(t)`. Norms are convex, so on tables the sup sits at a node.
    pub fn sup_lipschitz(&self, norm: VectorNorm) -> f64 {
        match self {
            PerturbationSpec::None => 0.0,
            PerturbationSpec::LinearConstant { q0 } | PerturbationSpec::LinearDecaying { q0, .. } => {
                norm.operator(q0.matrix())
            }
            PerturbationSpec::LinearTable { matrices, .. } => {
                matrices.iter().map(|m| norm.operator(m.matrix())).fold(0.0, f64::max)
            }
            PerturbationSpec::NonlinearSaturating { c, envelope } => c.abs() * envelope.sup(),
            PerturbationSpec::NonlinearTable { gains, .. } => gains.iter().fold(0.0, |m, g| m.max(g.abs())),
        }
    }

    /// `lim_{t -> inf} K(t)`.
    pub fn lipschitz_limit(&self, norm: VectorNorm) -> f64 {
        match self {
            PerturbationSpec::None | PerturbationSpec::LinearDecaying { .. } => 0.0,
            PerturbationSpec::LinearConstant { q0 } => norm.operator(q0.matrix()),
            PerturbationSpec::LinearTable { matrices, .. } => norm.operator(matrices.last().unwrap().matrix()),
            PerturbationSpec::NonlinearSaturating { c, envelope } => c.abs() * envelope.limit(),
            PerturbationSpec::NonlinearTable { gains, .. } => gains.last().unwrap().abs(),
        }
    }

    /// Last time after which `K` is constant (0 for time-invariant kinds,
    /// `inf` for the power-law kinds).
    pub fn settling_time(&self) -> f64 {
        match self {
            PerturbationSpec::None | PerturbationSpec::LinearConstant { .. } => 0.0,
            PerturbationSpec::LinearDecaying { .. } => f64::INFINITY,
            PerturbationSpec::LinearTable { times, .. } | PerturbationSpec::NonlinearTable { times, .. } => {
                *times.last().unwrap()
            }
            PerturbationSpec::NonlinearSaturating { envelope, .. } => match envelope {
                Envelope::Constant => 0.0,
                Envelope::Decaying { .. } => f64::INFINITY,
                Envelope::Table { times, .. } => *times.last().unwrap(),
            },
        }
    }
}
