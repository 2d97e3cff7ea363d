use nalgebra::DMatrix;
use serde::Serialize;

use super::{ml_matrix_scaled, SpectralData};
use crate::error::{Error, Result};
use crate::norm::VectorNorm;
use crate::quad::gauss_kronrod;
use crate::special_fn::{estimate_decay_constant, FracOrder, MlKind};

/// Estimate of `sup_t ||E(t^alpha A)||`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SupNorm {
    pub value: f64,
    pub t_argmax: f64,
    /// Grid density (points per decade) at which the maximum stabilized.
    pub points_per_decade: usize,
    /// Upper end of the searched range.
    pub t_cut: f64,
}

const SUP_T_MIN: f64 = 1e-3;
const SUP_BASE_DENSITY: usize = 50;
const SUP_MAX_DOUBLINGS: usize = 6;

pub(crate) fn require_sector(spec: &SpectralData, alpha: FracOrder) -> Result<()> {
    let c = spec.spectral_condition(alpha);
    if c.satisfied {
        Ok(())
    } else {
        Err(Error::SectorViolation {
            lambda: c.critical_eigenvalue().unwrap_or_default(),
            bound: alpha.sector_half_angle(),
        })
    }
}

/// Maximizes `||E(t^alpha A)||` over `{0} U [1e-3, T_cut]`, where `E` is
/// `E_alpha` or `E_{alpha,alpha}` and `T_cut = max(100, 10 t0)` with `t0`
/// the latest onset of the power-law envelope among the eigenvalues.
///
/// The geometric grid is doubled until the maximum moves by at most 1e-4
/// (relative), then the best sample is polished by golden-section search.
pub fn sup_ml_norm(alpha: FracOrder, which: MlKind, spec: &SpectralData, norm: VectorNorm) -> Result<SupNorm> {
    require_sector(spec, alpha)?;
    let params = match which {
        MlKind::EAlpha => alpha.ml_a1(),
        MlKind::EAlphaAlpha => alpha.ml_aa(),
    };
    let mut t0_max: f64 = 0.0;
    for b in spec.blocks() {
        let dc = estimate_decay_constant(alpha, b.eigenvalue, b.index - 1, which)?;
        t0_max = t0_max.max(dc.t0);
    }
    let t_cut = (10.0 * t0_max).max(100.0);
    let a = alpha.value();
    let eval = |t: f64| -> Result<f64> {
        Ok(norm.operator(&ml_matrix_scaled(params, t.powf(a), spec)?))
    };

    let decades = (t_cut / SUP_T_MIN).log10();
    let at = |k: usize, ppd: usize| SUP_T_MIN * 10f64.powf(k as f64 / ppd as f64);
    let mut ppd = SUP_BASE_DENSITY;
    let mut n = (decades * ppd as f64).ceil() as usize;
    let mut values = Vec::with_capacity(n + 1);
    for k in 0..=n {
        values.push(eval(at(k, ppd).min(t_cut))?);
    }
    let at_zero = eval(0.0)?;
    let best = |v: &[f64]| {
        v.iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |acc, (i, &x)| if x > acc.1 { (i, x) } else { acc })
    };
    let mut current = best(&values);
    for _ in 0..SUP_MAX_DOUBLINGS {
        ppd *= 2;
        n = (decades * ppd as f64).ceil() as usize;
        let mut refined = Vec::with_capacity(n + 1);
        for k in 0..=n {
            if k % 2 == 0 && k / 2 < values.len() {
                refined.push(values[k / 2]);
            } else {
                refined.push(eval(at(k, ppd).min(t_cut))?);
            }
        }
        let next = best(&refined);
        values = refined;
        let settled = (next.1 - current.1).abs() <= 1e-4 * next.1;
        current = next;
        if settled {
            break;
        }
    }

    let (k, mut value) = current;
    let mut t_argmax = at(k, ppd).min(t_cut);
    if k > 0 && k < n {
        // golden-section search in log t between the neighbours
        let (mut lo, mut hi) = (at(k - 1, ppd).ln(), at(k + 1, ppd).min(t_cut).ln());
        let g = 0.5 * (5f64.sqrt() - 1.0);
        let mut x1 = hi - g * (hi - lo);
        let mut x2 = lo + g * (hi - lo);
        let mut f1 = eval(x1.exp())?;
        let mut f2 = eval(x2.exp())?;
        for _ in 0..40 {
            if f1 > f2 {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - g * (hi - lo);
                f1 = eval(x1.exp())?;
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + g * (hi - lo);
                f2 = eval(x2.exp())?;
            }
        }
        let (x, f) = if f1 > f2 { (x1, f1) } else { (x2, f2) };
        if f > value {
            value = f;
            t_argmax = x.exp();
        }
    }
    if at_zero >= value {
        value = at_zero;
        t_argmax = 0.0;
    }
    Ok(SupNorm {
        value,
        t_argmax,
        points_per_decade: ppd,
        t_cut,
    })
}

/// `int_0^inf tau^{alpha-1} ||E_{alpha,alpha}(tau^alpha A)|| dtau` with its tail data.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KernelIntegral {
    pub value: f64,
    /// Power-law tail bound `M / (alpha T*^alpha)` beyond the cut.
    pub tail_bound: f64,
    pub t_star: f64,
    /// Fitted envelope constant with `||E_{alpha,alpha}(tau^alpha A)|| ~ M tau^{-2 alpha}`.
    pub envelope: f64,
}

const KERNEL_CUTS: [f64; 8] = [1e1, 1e2, 1e3, 1e4, 1e5, 1e6, 1e7, 1e8];

/// Running integral of `||E_{alpha,alpha}(u A)||` over `[0, reach]` in the
/// substituted variable `u = tau^alpha`.
struct KernelAccumulator<'a> {
    alpha: FracOrder,
    spec: &'a SpectralData,
    norm: VectorNorm,
    weight: Option<&'a DMatrix<f64>>,
    reach: f64,
    acc: f64,
}

/// Total at one cut together with the fitted tail constant.
struct CutValue {
    value: f64,
    envelope: f64,
}

impl<'a> KernelAccumulator<'a> {
    fn new(alpha: FracOrder, spec: &'a SpectralData, norm: VectorNorm, weight: Option<&'a DMatrix<f64>>) -> Self {
        KernelAccumulator {
            alpha,
            spec,
            norm,
            weight,
            reach: 0.0,
            acc: 0.0,
        }
    }

    fn integrand(&self, u: f64) -> Result<f64> {
        let e = ml_matrix_scaled(self.alpha.ml_aa(), u, self.spec)?;
        Ok(match self.weight {
            Some(w) => self.norm.operator(&(e * w)),
            None => self.norm.operator(&e),
        })
    }

    /// Total with the cut at `tau = t`; cuts must not decrease between calls.
    fn at(&mut self, t: f64) -> Result<CutValue> {
        let a = self.alpha.value();
        let cut = t.powf(a);
        while self.reach < cut {
            let lo = self.reach;
            let hi = if lo == 0.0 { 1.0f64.min(cut) } else { (2.0 * lo).min(cut) };
            let abs_tol = 1e-14 * self.acc.max(1e-3);
            self.acc += gauss_kronrod(|u| self.integrand(u), lo, hi, 1e-10, abs_tol)?.value;
            self.reach = hi;
        }
        // fit u^2 g(u) = M + c/u through u = cut/2 and u = cut
        let h_half = 0.25 * cut * cut * self.integrand(0.5 * cut)?;
        let h_full = cut * cut * self.integrand(cut)?;
        let c = (h_half - h_full) * cut;
        let m_hat = h_full - c / cut;
        let tail = (m_hat / cut + c / (2.0 * cut * cut)).max(0.0);
        Ok(CutValue {
            value: (self.acc + tail) / a,
            envelope: m_hat.max(h_full).max(0.0),
        })
    }
}

/// Computes the kernel integral after the substitution `u = tau^alpha`,
/// which removes the endpoint singularity:
/// `(1/alpha) int_0^inf ||E_{alpha,alpha}(u A)|| du`.
///
/// Beyond `U = T^alpha` the integrand is fitted as `M/u^2 + c/u^3` from its
/// values at `U/2` and `U`, and the fit is integrated analytically. `T*` is
/// the first decade cut at which the total moves by at most 1e-4 (relative)
/// from the previous cut.
pub fn kernel_integral(alpha: FracOrder, spec: &SpectralData, norm: VectorNorm) -> Result<KernelIntegral> {
    require_sector(spec, alpha)?;
    settle(KernelAccumulator::new(alpha, spec, norm, None))
}

/// `int_0^inf tau^{alpha-1} ||E_{alpha,alpha}(tau^alpha A) W|| dtau`, computed
/// like `kernel_integral`. With `W = I` the two agree.
pub fn weighted_kernel_integral(
    alpha: FracOrder,
    spec: &SpectralData,
    norm: VectorNorm,
    weight: &DMatrix<f64>,
) -> Result<KernelIntegral> {
    require_sector(spec, alpha)?;
    if weight.nrows() != spec.dim() {
        return Err(Error::DimensionMismatch {
            expected: spec.dim(),
            found: weight.nrows(),
        });
    }
    settle(KernelAccumulator::new(alpha, spec, norm, Some(weight)))
}

fn settle(mut accumulator: KernelAccumulator<'_>) -> Result<KernelIntegral> {
    let a = accumulator.alpha.value();
    let mut previous: Option<f64> = None;
    for &t in &KERNEL_CUTS {
        let cv = accumulator.at(t)?;
        if let Some(prev) = previous {
            if (cv.value - prev).abs() <= 1e-4 * cv.value || (cv.value == 0.0 && prev == 0.0) {
                return Ok(KernelIntegral {
                    value: cv.value,
                    tail_bound: cv.envelope / (a * t.powf(a)),
                    t_star: t,
                    envelope: cv.envelope,
                });
            }
        }
        previous = Some(cv.value);
    }
    Err(Error::NonConvergence(format!(
        "kernel integral did not settle before T* = {:e}",
        KERNEL_CUTS[KERNEL_CUTS.len() - 1]
    )))
}

/// The kernel integral with the cut fixed at `t_star`.
pub fn kernel_integral_at(alpha: FracOrder, spec: &SpectralData, norm: VectorNorm, t_star: f64) -> Result<f64> {
    require_sector(spec, alpha)?;
    if !(t_star > 0.0 && t_star.is_finite()) {
        return Err(Error::InvalidInput(format!("cut must be positive, got {t_star}")));
    }
    Ok(KernelAccumulator::new(alpha, spec, norm, None).at(t_star)?.value)
}
