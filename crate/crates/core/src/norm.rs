//! Vector norms on R^d and the operator norms they induce.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

/// Vector norm used for every certificate constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VectorNorm {
    /// max_i |x_i|; induces the maximum absolute row sum.
    #[default]
    Max,
    /// sqrt(sum x_i^2); induces the spectral norm.
    Euclidean,
    /// sum_i |x_i|; induces the maximum absolute column sum.
    One,
}

impl VectorNorm {
    pub fn vector(self, x: &DVector<f64>) -> f64 {
        match self {
            VectorNorm::Max => x.iter().fold(0.0, |m, v| m.max(v.abs())),
            VectorNorm::Euclidean => x.norm(),
            VectorNorm::One => x.iter().map(|v| v.abs()).sum(),
        }
    }

    /// Induced operator norm of `m`.
    pub fn operator(self, m: &DMatrix<f64>) -> f64 {
        match self {
            VectorNorm::Max => m
                .row_iter()
                .map(|r| r.iter().map(|v| v.abs()).sum::<f64>())
                .fold(0.0, f64::max),
            VectorNorm::One => m
                .column_iter()
                .map(|c| c.iter().map(|v| v.abs()).sum::<f64>())
                .fold(0.0, f64::max),
            VectorNorm::Euclidean => {
                if m.is_empty() {
                    return 0.0;
                }
                m.clone()
                    .svd(false, false)
                    .singular_values
                    .iter()
                    .fold(0.0, |a, &b| a.max(b))
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            VectorNorm::Max => "max",
            VectorNorm::Euclidean => "euclidean",
            VectorNorm::One => "one",
        }
    }
}

impl std::str::FromStr for VectorNorm {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "max" => Ok(VectorNorm::Max),
            "euclidean" => Ok(VectorNorm::Euclidean),
            "one" => Ok(VectorNorm::One),
            other => Err(format!("unknown norm '{other}' (expected max, euclidean or one)")),
        }
    }
}
