use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::q::sup_after;
use crate::error::{Error, Result};
use crate::matfun::{require_sector, FracSystem};
use crate::quad::TimeGrid;
use crate::solver::{KernelPrimitives, PerturbationSpec};
use crate::special_fn::{gamma, ln_ml_positive};

/// Number of probe pairs in the beta-norm contraction estimate.
pub const PROBE_COUNT: usize = 20;
/// The analytic contraction factor in the beta-norm.
pub const BETA_TARGET: f64 = 0.5;
/// Slack on `BETA_TARGET` before the certificate fails.
pub const BETA_TOLERANCE: f64 = 0.05;

/// The two constants bounding the kernel and the perturbation, and
/// `M = max(1, m_gamma, m_int)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MPair {
    /// `Gamma(alpha) sup_t ||E_{alpha,alpha}(t^alpha A)|| sup_t K(t)`.
    pub m_gamma: f64,
    /// `int_0^inf tau^{alpha-1} ||E_{alpha,alpha}(tau^alpha A)|| dtau`.
    pub m_int: f64,
    pub m: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BetaCertificate {
    pub m: MPair,
    /// First sampled time after which `K < 1/(5M)`.
    pub t_decay: f64,
    /// `ln beta(T) = ln E_alpha(5 M T^alpha)`.
    pub ln_beta_max: f64,
    /// Largest probe ratio `||T xi - T xi~||_beta / ||xi - xi~||_beta`.
    pub contraction: f64,
    pub probe_ratios: Vec<f64>,
    pub passed: bool,
}

/// The smallest `M >= 1` with `sup ||E_{alpha,alpha}|| sup K <= M / Gamma(alpha)`
/// and `sup_t int_0^t tau^{alpha-1} ||E_{alpha,alpha}(tau^alpha A)|| dtau <= M`.
pub fn m_pair(sys: &FracSystem, pert: &PerturbationSpec) -> Result<MPair> {
    require_sector(sys.spectral(), sys.alpha())?;
    let sup_k = pert.sup_lipschitz(sys.norm());
    let m_gamma = gamma(sys.alpha().value())? * sys.sup_eaa()?.value * sup_k;
    let m_int = sys.kernel_integral()?.value;
    Ok(MPair {
        m_gamma,
        m_int,
        m: 1.0f64.max(m_gamma).max(m_int),
    })
}

/// First of the sorted `times` after which every sample of `K`, including
/// the breakpoints and the limit, stays below `threshold`.
pub(crate) fn decay_time(pert: &PerturbationSpec, sys: &FracSystem, times: &[f64], threshold: f64) -> Option<f64> {
    let norm = sys.norm();
    let mut found = None;
    for &t in times.iter().rev() {
        if sup_after(pert, t, norm) < threshold {
            found = Some(t);
        } else {
            break;
        }
    }
    found
}

/// Resolution of the probe grid on `[0, T]` in units of `ln beta`.
const LN_BETA_STEP: f64 = 0.25;
/// History older than `ln beta_n - ln beta_j > LN_BETA_WINDOW` is dropped
/// (relative weight below `1e-16`).
const LN_BETA_WINDOW: f64 = 37.0;
const MIN_FINE_STEPS: usize = 256;
/// Bound on fine nodes times the dimension.
const MAX_FINE_WORK: usize = 1 << 18;

/// Estimates the Lipschitz factor of the Lyapunov-Perron operator in the
/// norm `||y||_beta = sup_t ||y(t)|| / beta(t)`, with
/// `beta(t) = E_alpha(5 M min(t, T)^alpha)` and `T` the first node of
/// `grid` after which `K < 1/(5M)`.
///
/// The operator difference is linear in `xi - xi~` for linear kinds; for
/// nonlinear kinds the probes are infinitesimal pairs around random base
/// paths, acted on by the Jacobians of `f`. Each probe is a direction
/// field `u` with `max_j ||u_j|| = 1`, so `xi - xi~ = beta u` has unit
/// beta-norm.
///
/// `beta` grows like `exp((5M)^{1/alpha} t)`, far faster than `grid`
/// resolves, so `[0, T]` is replaced by a uniform grid on which `ln beta`
/// moves by about 1/4 per step, and `grid` is kept after `T`. Ratios are
/// formed node by node with weights `beta_j / beta_n <= 1`, which stay
/// finite when `beta(T)` itself overflows.
pub fn beta_norm_certificate(
    sys: &FracSystem,
    pert: &PerturbationSpec,
    grid: &TimeGrid,
    seed: u64,
) -> Result<BetaCertificate> {
    pert.validate(sys.dim())?;
    let m = m_pair(sys, pert)?;
    let threshold = 1.0 / (5.0 * m.m);
    let t_decay = decay_time(pert, sys, grid.nodes(), threshold).ok_or(Error::NoDecay { threshold })?;

    let a = sys.alpha().value();
    let d = sys.dim();
    let params = sys.alpha().ml_a1();
    let ln_beta_at = |t: f64| ln_ml_positive(params, 5.0 * m.m * t.min(t_decay).powf(a));
    let ln_beta_max = ln_beta_at(t_decay)?;

    let fine = if t_decay > 0.0 {
        MIN_FINE_STEPS.max((ln_beta_max / LN_BETA_STEP).ceil() as usize)
    } else {
        0
    };
    if fine * d > MAX_FINE_WORK {
        return Err(Error::NonConvergence(format!(
            "beta weight too steep to resolve: ln beta(T) = {ln_beta_max:.1} needs {fine} steps"
        )));
    }
    let h_fine = if fine > 0 { t_decay / fine as f64 } else { 0.0 };
    let mut nodes: Vec<f64> = (0..=fine).map(|i| i as f64 * h_fine).collect();
    nodes.extend(grid.nodes().iter().copied().filter(|&t| t > t_decay));
    let ln_beta = nodes.iter().map(|&t| ln_beta_at(t)).collect::<Result<Vec<_>>>()?;
    let coarse_step = grid.step();

    // probe directions pushed through the Jacobians, flat as [probe][node][i]
    let norm = sys.norm();
    let n_nodes = nodes.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pushed = vec![0.0; PROBE_COUNT * n_nodes * d];
    for p in 0..PROBE_COUNT {
        let direction = probe_direction(p, d, &mut rng);
        let amps: Vec<f64> = (0..n_nodes)
            .map(|_| if p < 2 { 1.0 } else { rng.gen_range(0.5..=1.0) })
            .collect();
        let scale = amps.iter().fold(0.0f64, |m, &x| m.max(x)) * norm.vector(&direction);
        for (j, &t) in nodes.iter().enumerate() {
            let base = if pert.is_linear() {
                DVector::zeros(d)
            } else {
                DVector::from_fn(d, |_, _| rng.gen_range(-2.0..=2.0))
            };
            let v = pert.jacobian(t, &base) * &direction * (amps[j] / scale);
            pushed[(p * n_nodes + j) * d..][..d].copy_from_slice(v.as_slice());
        }
    }

    let prim = KernelPrimitives::new(sys)?;
    // increments Q(k h) - Q((k-1) h) by lag on the two uniform parts
    let mut dq_fine = LagIncrements::new(h_fine);
    let mut dq_coarse = LagIncrements::new(coarse_step.unwrap_or(0.0));
    let mut direct: Vec<DMatrix<f64>> = Vec::new();
    let mut ratios = vec![0.0f64; PROBE_COUNT];
    let mut j0 = 0;
    let mut acc = DVector::zeros(d);
    let mut slope = DVector::zeros(d);
    let mut scale = Vec::new();
    for n in 1..n_nodes {
        while ln_beta[n] - ln_beta[j0] > LN_BETA_WINDOW {
            j0 += 1;
        }
        // sources j >= split use the lag caches, the rest `direct`
        let split = if n <= fine {
            dq_fine.extend(n - j0, &prim)?;
            j0
        } else if coarse_step.is_some() {
            dq_coarse.extend(n - fine, &prim)?;
            fine.max(j0)
        } else {
            n
        };
        direct.clear();
        if split > j0 {
            let q = (j0..=split)
                .map(|j| prim.q(nodes[n] - nodes[j]))
                .collect::<Result<Vec<_>>>()?;
            direct.extend(q.windows(2).map(|w| &w[0] - &w[1]));
        }
        let weight = |j: usize| -> &DMatrix<f64> {
            if j < split {
                &direct[j - j0]
            } else if n <= fine {
                &dq_fine.store[n - j]
            } else {
                &dq_coarse.store[n - j]
            }
        };
        let start = if j0 == 0 { Some(prim.p(nodes[n])?) } else { None };
        scale.clear();
        scale.extend((j0..=n).map(|j| (ln_beta[j] - ln_beta[n]).exp()));
        for (p, ratio) in ratios.iter_mut().enumerate() {
            let row = &pushed[p * n_nodes * d..][..n_nodes * d];
            acc.fill(0.0);
            if let Some(p0) = &start {
                slope.copy_from_slice(&row[..d]);
                acc.gemv(scale[0], p0, &slope, 0.0);
            }
            for j in j0..n {
                let (s0, s1) = (scale[j - j0], scale[j + 1 - j0]);
                let inv_h = 1.0 / (nodes[j + 1] - nodes[j]);
                for i in 0..d {
                    slope[i] = (row[(j + 1) * d + i] * s1 - row[j * d + i] * s0) * inv_h;
                }
                // column-major w * slope without the overhead of gemv at tiny d
                for (c, col) in weight(j).as_slice().chunks_exact(d).enumerate() {
                    let sc = slope[c];
                    for (a, w) in acc.iter_mut().zip(col) {
                        *a += w * sc;
                    }
                }
            }
            *ratio = ratio.max(norm.vector(&acc));
        }
    }
    let contraction = ratios.iter().copied().fold(0.0, f64::max);
    Ok(BetaCertificate {
        m,
        t_decay,
        ln_beta_max,
        contraction,
        probe_ratios: ratios,
        passed: contraction <= BETA_TARGET + BETA_TOLERANCE,
    })
}

/// `Q(k h) - Q((k-1) h)` for `k >= 1`, grown on demand (`store[0]` unused).
struct LagIncrements {
    step: f64,
    q_last: Option<DMatrix<f64>>,
    store: Vec<DMatrix<f64>>,
}

impl LagIncrements {
    fn new(step: f64) -> Self {
        LagIncrements {
            step,
            q_last: None,
            store: Vec::new(),
        }
    }

    fn extend(&mut self, k_max: usize, prim: &KernelPrimitives<'_>) -> Result<()> {
        while self.store.len() <= k_max {
            let k = self.store.len();
            let q = prim.q(k as f64 * self.step)?;
            let inc = match &self.q_last {
                Some(prev) => &q - prev,
                None => q.clone() * 0.0,
            };
            self.store.push(inc);
            self.q_last = Some(q);
        }
        Ok(())
    }
}

/// Probe 0 is the first basis vector, probe 1 the all-ones vector and the
/// rest random directions.
fn probe_direction(p: usize, d: usize, rng: &mut ChaCha8Rng) -> DVector<f64> {
    match p {
        0 => DVector::from_fn(d, |i, _| if i == 0 { 1.0 } else { 0.0 }),
        1 => DVector::from_element(d, 1.0),
        _ => {
            let v = DVector::from_fn(d, |_, _| rng.gen_range(-1.0..=1.0));
            if v.amax() > 0.0 {
                v
            } else {
                DVector::from_element(d, 1.0)
            }
        }
    }
}
