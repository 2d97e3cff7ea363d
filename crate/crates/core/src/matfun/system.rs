use std::sync::OnceLock;

use nalgebra::{DMatrix, DVector};

use super::{
    kernel_integral, ml_matrix, spectral_decompose, spectral_decompose_with_jordan, sup_ml_norm,
    JordanBlock, KernelIntegral, SpectralCondition, SpectralData, SquareMatrix, SupNorm,
};
use crate::error::Result;
use crate::norm::VectorNorm;
use crate::special_fn::{FracOrder, MlKind};

/// A linear Caputo system `D^alpha x = A x` with its spectral data and the
/// norm used for all derived constants. Expensive constants are computed
/// on first use and cached.
#[derive(Debug)]
pub struct FracSystem {
    alpha: FracOrder,
    matrix: SquareMatrix,
    spectral: SpectralData,
    norm: VectorNorm,
    sup_ea: OnceLock<Result<SupNorm>>,
    sup_eaa: OnceLock<Result<SupNorm>>,
    kernel: OnceLock<Result<KernelIntegral>>,
}

impl FracSystem {
    pub fn new(alpha: FracOrder, matrix: SquareMatrix, norm: VectorNorm) -> Result<Self> {
        let spectral = spectral_decompose(&matrix)?;
        Ok(Self::from_parts(alpha, matrix, spectral, norm))
    }

    pub fn with_jordan(
        alpha: FracOrder,
        matrix: SquareMatrix,
        norm: VectorNorm,
        structure: &[JordanBlock],
    ) -> Result<Self> {
        let spectral = spectral_decompose_with_jordan(&matrix, structure)?;
        Ok(Self::from_parts(alpha, matrix, spectral, norm))
    }

    fn from_parts(alpha: FracOrder, matrix: SquareMatrix, spectral: SpectralData, norm: VectorNorm) -> Self {
        FracSystem {
            alpha,
            matrix,
            spectral,
            norm,
            sup_ea: OnceLock::new(),
            sup_eaa: OnceLock::new(),
            kernel: OnceLock::new(),
        }
    }

    pub fn alpha(&self) -> FracOrder {
        self.alpha
    }

    pub fn matrix(&self) -> &SquareMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn spectral(&self) -> &SpectralData {
        &self.spectral
    }

    pub fn norm(&self) -> VectorNorm {
        self.norm
    }

    pub fn sector(&self) -> SpectralCondition {
        self.spectral.spectral_condition(self.alpha)
    }

    /// `E_alpha(t^alpha A)`.
    pub fn ea(&self, t: f64) -> Result<DMatrix<f64>> {
        ml_matrix(self.alpha.ml_a1(), t, &self.spectral)
    }

    /// `E_{alpha,alpha}(t^alpha A)`.
    pub fn eaa(&self, t: f64) -> Result<DMatrix<f64>> {
        ml_matrix(self.alpha.ml_aa(), t, &self.spectral)
    }

    /// `E_alpha(t^alpha A) x0`.
    pub fn propagate(&self, t: f64, x0: &DVector<f64>) -> Result<DVector<f64>> {
        Ok(self.ea(t)? * x0)
    }

    /// `sup_t ||E_alpha(t^alpha A)||`.
    pub fn sup_ea(&self) -> Result<SupNorm> {
        self.sup_ea
            .get_or_init(|| sup_ml_norm(self.alpha, MlKind::EAlpha, &self.spectral, self.norm))
            .clone()
    }

    /// `sup_t ||E_{alpha,alpha}(t^alpha A)||`.
    pub fn sup_eaa(&self) -> Result<SupNorm> {
        self.sup_eaa
            .get_or_init(|| sup_ml_norm(self.alpha, MlKind::EAlphaAlpha, &self.spectral, self.norm))
            .clone()
    }

    /// `int_0^inf tau^{alpha-1} ||E_{alpha,alpha}(tau^alpha A)|| dtau`.
    pub fn kernel_integral(&self) -> Result<KernelIntegral> {
        self.kernel
            .get_or_init(|| kernel_integral(self.alpha, &self.spectral, self.norm))
            .clone()
    }
}
