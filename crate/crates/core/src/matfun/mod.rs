//! Matrix-argument Mittag-Leffler functions and the kernel quantities built
//! from them.

mod function;
mod kernel;
pub(crate) use kernel::require_sector;
mod spectral;
mod system;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use function::{ml_matrix, ml_matrix_scaled};
pub use kernel::{
    kernel_integral, kernel_integral_at, sup_ml_norm, weighted_kernel_integral, KernelIntegral, SupNorm,
};
pub use spectral::{
    check_spectral_condition, eigenvalues, spectral_decompose, spectral_decompose_with_jordan,
    JordanBlock, SpectralBlock, SpectralCondition, SpectralData, DEFECTIVE_CONDITION,
    MAX_DIMENSION,
};
pub use system::FracSystem;

/// Real square matrix with finite entries.
///
/// Serialized as row-major nested arrays.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<f64>>", into = "Vec<Vec<f64>>")]
pub struct SquareMatrix(DMatrix<f64>);

impl SquareMatrix {
    pub fn new(m: DMatrix<f64>) -> Result<Self> {
        if m.nrows() == 0 || m.nrows() != m.ncols() {
            return Err(Error::InvalidInput(format!(
                "matrix must be square and non-empty, got {}x{}",
                m.nrows(),
                m.ncols()
            )));
        }
        if m.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput("matrix entries must be finite".into()));
        }
        Ok(SquareMatrix(m))
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let d = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != d) {
            return Err(Error::InvalidInput(format!(
                "matrix is not square: {d} rows but a row of length {}",
                r.len()
            )));
        }
        Self::new(DMatrix::from_fn(d, d, |i, j| rows[i][j]))
    }

    /// The 1x1 matrix `[[a]]`.
    pub fn scalar(a: f64) -> Result<Self> {
        Self::new(DMatrix::from_element(1, 1, a))
    }

    pub fn diagonal(entries: &[f64]) -> Result<Self> {
        let d = entries.len();
        Self::new(DMatrix::from_fn(d, d, |i, j| if i == j { entries[i] } else { 0.0 }))
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.0
    }

    pub fn into_inner(self) -> DMatrix<f64> {
        self.0
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.0.row_iter().map(|r| r.iter().copied().collect()).collect()
    }
}

impl TryFrom<Vec<Vec<f64>>> for SquareMatrix {
    type Error = Error;
    fn try_from(rows: Vec<Vec<f64>>) -> Result<Self> {
        SquareMatrix::from_rows(&rows)
    }
}

impl From<SquareMatrix> for Vec<Vec<f64>> {
    fn from(m: SquareMatrix) -> Self {
        m.rows()
    }
}
