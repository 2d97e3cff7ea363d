//! Empirical decay constants of E_alpha(lambda t^alpha) and E_{alpha,alpha}(lambda t^alpha).

use num_complex::Complex64;
use serde::Serialize;

use super::{ml_dlambda, FracOrder};
use crate::error::{Error, Result};

/// Which Mittag-Leffler family the decay constant refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MlKind {
    /// E_alpha, decaying like t^{-alpha}.
    EAlpha,
    /// E_{alpha,alpha}, decaying like t^{-2 alpha}.
    EAlphaAlpha,
}

impl MlKind {
    /// Decay exponent in units of alpha.
    pub fn exponent_factor(self) -> f64 {
        match self {
            MlKind::EAlpha => 1.0,
            MlKind::EAlphaAlpha => 2.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DecayConstant {
    pub constant: f64,
    pub t0: f64,
}

const T_MIN: f64 = 1.0e-2;
const T_MAX: f64 = 1.0e6;
const PER_DECADE: usize = 25;

/// Estimates M with `t^{p alpha} |d^l/dlambda^l E(lambda t^alpha)| <= M` for
/// t >= t0, where p is 1 for E_alpha and 2 for E_{alpha,alpha}.
///
/// The products are sampled on a geometric grid over [1e-2, 1e6]. t0 is the
/// first sample after which the running sup stays within 1% of its value on
/// the last decade, and the constant is the sup over [t0, 1e6].
pub fn estimate_decay_constant(
    alpha: FracOrder,
    lambda: Complex64,
    l: usize,
    which: MlKind,
) -> Result<DecayConstant> {
    let a = alpha.value();
    let bound = alpha.sector_half_angle();
    if lambda.norm() == 0.0 || lambda.arg().abs() <= bound {
        return Err(Error::SectorViolation { lambda, bound });
    }
    let params = match which {
        MlKind::EAlpha => alpha.ml_a1(),
        MlKind::EAlphaAlpha => alpha.ml_aa(),
    };
    let p = which.exponent_factor() * a;
    let decades = (T_MAX / T_MIN).log10().round() as usize;
    let n = decades * PER_DECADE + 1;
    let mut ts = Vec::with_capacity(n);
    let mut vals = Vec::with_capacity(n);
    for i in 0..n {
        let t = T_MIN * 10f64.powf(i as f64 / PER_DECADE as f64);
        let v = ml_dlambda(params, t, lambda, l)?.norm() * t.powf(p);
        ts.push(t);
        vals.push(v);
    }
    // suffix sup
    let mut sup = vals.clone();
    for i in (0..n - 1).rev() {
        sup[i] = sup[i].max(sup[i + 1]);
    }
    let last_decade = n - 1 - PER_DECADE;
    let reference = sup[last_decade];
    let i0 = (0..n).find(|&i| sup[i] <= 1.01 * reference).unwrap_or(last_decade);
    Ok(DecayConstant {
        constant: sup[i0],
        t0: ts[i0],
    })
}
