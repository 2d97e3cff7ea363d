use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matfun::{ml_matrix_scaled, require_sector, weighted_kernel_integral, FracSystem};
use crate::norm::VectorNorm;
use crate::quad::gauss_kronrod;
use crate::solver::PerturbationSpec;

/// Exponents `k` of the sampled horizons `t = 2^k`. For decaying
/// perturbations the sup is often attained well before `t = 1`.
pub const Q_HORIZON_EXPONENTS: std::ops::RangeInclusive<i32> = -8..=16;
/// Golden-section steps refining the best sampled horizon.
const REFINE_STEPS: usize = 24;

/// How the perturbation enters the q-integrand.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QMode {
    /// `||E_{alpha,alpha}((t-tau)^alpha A) Q(tau)||`.
    #[default]
    ProductNorm,
    /// `||E_{alpha,alpha}((t-tau)^alpha A)|| K(tau)`, an upper bound.
    NormBound,
}

/// `q = sup_t int_0^t (t-tau)^{alpha-1} ||E_{alpha,alpha}((t-tau)^alpha A) ...|| dtau`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QEstimate {
    /// `max(sampled_max, limit)`.
    pub value: f64,
    /// Quadrature error estimate at the horizon that attains `value`.
    pub quadrature_error: f64,
    /// Upper bound on the integral at any horizon beyond the largest sample.
    pub tail_bound: f64,
    pub sampled_max: f64,
    pub sampled_argmax: f64,
    /// The `t -> inf` value, computed with the limit of the perturbation.
    pub limit: f64,
    pub limit_dominates: bool,
    /// `(t, integral)` at each sampled horizon, including the refined maximum.
    pub horizons: Vec<(f64, f64)>,
    pub mode: QMode,
}

/// `q` of a linear perturbation with the norm of the product inside the
/// integrand (or the product of norms in `QMode::NormBound`).
pub fn compute_q_linear(sys: &FracSystem, pert: &PerturbationSpec, mode: QMode) -> Result<QEstimate> {
    if !pert.is_linear() {
        return Err(Error::WrongPerturbationKind { expected: "linear" });
    }
    pert.validate(sys.dim())?;
    compute(sys, pert, mode)
}

/// `q` with the Lipschitz envelope `K(t)` outside the norm; accepts any kind.
pub fn compute_q_nonlinear(sys: &FracSystem, pert: &PerturbationSpec) -> Result<QEstimate> {
    pert.validate(sys.dim())?;
    compute(sys, pert, QMode::NormBound)
}

fn compute(sys: &FracSystem, pert: &PerturbationSpec, mode: QMode) -> Result<QEstimate> {
    require_sector(sys.spectral(), sys.alpha())?;
    let norm = sys.norm();
    let d = sys.dim();
    let a = sys.alpha().value();
    let params = sys.alpha().ml_aa();
    let spec = sys.spectral();
    let product = mode == QMode::ProductNorm && pert.is_linear();

    // integrand in v = u^alpha for the lag u = t - tau
    let integrand = |v: f64, tau: f64| -> Result<f64> {
        let e = ml_matrix_scaled(params, v, spec)?;
        Ok(if product {
            norm.operator(&(e * pert.matrix_at(tau, d)?))
        } else {
            norm.operator(&e) * pert.lipschitz(tau, norm)
        } / a)
    };

    let horizon_integral = |t: f64| -> Result<(f64, f64)> {
        let kinks: Vec<f64> = pert
            .breakpoints()
            .iter()
            .filter(|&&b| b > 0.0 && b < t)
            .map(|&b| (t - b).powf(a))
            .collect();
        let (mut total, mut err) = (0.0, 0.0);
        for (lo, hi) in panels(0.0, t.powf(a), &kinks) {
            let r = gauss_kronrod(|v| integrand(v, t - v.powf(1.0 / a)), lo, hi, 1e-9, 1e-13)?;
            total += r.value;
            err += r.error;
        }
        Ok((total, err))
    };

    let times: Vec<f64> = Q_HORIZON_EXPONENTS.map(|k| 2f64.powi(k)).collect();
    let mut horizons = Vec::with_capacity(times.len() + REFINE_STEPS);
    let mut errors = Vec::with_capacity(times.len() + REFINE_STEPS);
    if pert.settling_time() == 0.0 {
        // the integrand does not depend on t, so the integral is a running
        // total and nondecreasing in t
        let (mut reach, mut acc, mut acc_err) = (0.0, 0.0, 0.0);
        for &t in &times {
            let top = t.powf(a);
            for (lo, hi) in panels(reach, top, &[]) {
                let r = gauss_kronrod(|v| integrand(v, 0.0), lo, hi, 1e-9, 1e-13)?;
                acc += r.value;
                acc_err += r.error;
            }
            reach = top;
            horizons.push((t, acc));
            errors.push(acc_err);
        }
    } else {
        for &t in &times {
            let (v, e) = horizon_integral(t)?;
            horizons.push((t, v));
            errors.push(e);
        }
        let best = argmax(&horizons);
        if best + 1 < horizons.len() {
            // golden section in ln t between the neighbours of the best sample
            let lo_t = if best == 0 { 0.5 * times[0] } else { times[best - 1] };
            let (mut lo, mut hi) = (lo_t.ln(), times[best + 1].ln());
            let g = 0.5 * (5f64.sqrt() - 1.0);
            let mut x1 = hi - g * (hi - lo);
            let mut x2 = lo + g * (hi - lo);
            let mut f1 = horizon_integral(x1.exp())?;
            let mut f2 = horizon_integral(x2.exp())?;
            for _ in 0..REFINE_STEPS {
                if f1.0 >= f2.0 {
                    hi = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = hi - g * (hi - lo);
                    f1 = horizon_integral(x1.exp())?;
                } else {
                    lo = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = lo + g * (hi - lo);
                    f2 = horizon_integral(x2.exp())?;
                }
            }
            let (x, f) = if f1.0 >= f2.0 { (x1, f1) } else { (x2, f2) };
            let pos = horizons.partition_point(|h| h.0 < x.exp());
            horizons.insert(pos, (x.exp(), f.0));
            errors.insert(pos, f.1);
        }
    }
    let i_max = argmax(&horizons);
    let (sampled_argmax, sampled_max) = horizons[i_max];

    let kernel = sys.kernel_integral()?;
    let limit = if product {
        let q_inf = pert.limit_matrix(d)?;
        if q_inf.iter().all(|&x| x == 0.0) {
            0.0
        } else {
            weighted_kernel_integral(sys.alpha(), spec, norm, &q_inf)?.value
        }
    } else {
        pert.lipschitz_limit(norm) * kernel.value
    };

    // beyond t_max: the lags up to t_max/2 see K(tau) for tau >= t_max/2,
    // the longer lags only see the kernel tail
    let split = 0.5 * 2f64.powi(*Q_HORIZON_EXPONENTS.end());
    let late_k = sup_after(pert, split, norm);
    let kernel_tail = kernel.envelope / (a * split.powf(a));
    let tail_bound = late_k * kernel.value + pert.sup_lipschitz(norm) * kernel_tail;

    let limit_dominates = limit > sampled_max;
    Ok(QEstimate {
        value: sampled_max.max(limit),
        quadrature_error: if limit_dominates { kernel.tail_bound } else { errors[i_max] },
        tail_bound,
        sampled_max,
        sampled_argmax,
        limit,
        limit_dominates,
        horizons,
        mode,
    })
}

fn argmax(h: &[(f64, f64)]) -> usize {
    h.iter()
        .enumerate()
        .max_by(|x, y| x.1 .1.total_cmp(&y.1 .1))
        .map(|(i, _)| i)
        .expect("horizons are nonempty")
}

/// Panels covering `[from, to]`: doubling from 1, split at `kinks`.
fn panels(from: f64, to: f64, kinks: &[f64]) -> Vec<(f64, f64)> {
    if to <= from {
        return Vec::new();
    }
    let mut cuts = vec![from, to];
    let mut c = 1.0;
    while c < to {
        if c > from {
            cuts.push(c);
        }
        c *= 2.0;
    }
    cuts.extend(kinks.iter().copied().filter(|&k| k > from && k < to));
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    cuts.windows(2).map(|w| (w[0], w[1])).collect()
}

/// `sup_{tau >= s} K(tau)`. `K` is monotone between breakpoints.
pub(crate) fn sup_after(pert: &PerturbationSpec, s: f64, norm: VectorNorm) -> f64 {
    pert.breakpoints()
        .iter()
        .filter(|&&b| b >= s)
        .map(|&b| pert.lipschitz(b, norm))
        .fold(pert.lipschitz(s, norm).max(pert.lipschitz_limit(norm)), f64::max)
}
