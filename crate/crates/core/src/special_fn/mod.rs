//! Scalar special functions: Gamma, Mittag-Leffler and decay constants.

mod decay;
mod gamma;
mod mittag_leffler;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use decay::{estimate_decay_constant, DecayConstant, MlKind};
pub use gamma::{gamma, ln_gamma, rgamma, GAMMA_MAX_ARG};
pub use mittag_leffler::{
    ln_ml_positive, ml, ml_derivative, ml_derivative_in, ml_dlambda, ml_real, EvalRegion,
    RegionBounds, ASYMPTOTIC_RADIUS, MAX_DERIVATIVE_ORDER, MAX_SERIES_RADIUS,
};

/// Order of the fractional derivative, strictly inside (0, 1).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct FracOrder(f64);

impl FracOrder {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha > 0.0 && alpha < 1.0 {
            Ok(FracOrder(alpha))
        } else {
            Err(Error::Domain(format!(
                "fractional order must lie strictly inside (0, 1), got {alpha}"
            )))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// Half-opening of the instability sector, alpha pi / 2.
    pub fn sector_half_angle(self) -> f64 {
        self.0 * std::f64::consts::FRAC_PI_2
    }

    /// Parameters of E_{alpha,beta}.
    pub fn ml(self, beta: f64) -> MlParams {
        MlParams {
            alpha: self.0,
            beta,
        }
    }

    /// Parameters of E_alpha = E_{alpha,1}.
    pub fn ml_a1(self) -> MlParams {
        self.ml(1.0)
    }

    /// Parameters of E_{alpha,alpha}.
    pub fn ml_aa(self) -> MlParams {
        self.ml(self.0)
    }
}

impl TryFrom<f64> for FracOrder {
    type Error = Error;
    fn try_from(v: f64) -> Result<Self> {
        FracOrder::new(v)
    }
}

impl From<FracOrder> for f64 {
    fn from(a: FracOrder) -> f64 {
        a.0
    }
}

/// Parameters (alpha, beta) of the two-parameter Mittag-Leffler function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MlParams {
    alpha: f64,
    beta: f64,
}

impl MlParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::Domain(format!("alpha must be positive, got {alpha}")));
        }
        if !beta.is_finite() {
            return Err(Error::Domain(format!("beta must be finite, got {beta}")));
        }
        Ok(MlParams { alpha, beta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
}
