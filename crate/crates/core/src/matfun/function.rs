use nalgebra::DMatrix;
use num_complex::Complex64;

use super::SpectralData;
use crate::error::{Error, Result};
use crate::special_fn::{ml_derivative, rgamma, MlParams};

/// `E_{alpha,beta}(t^alpha A)` for `t >= 0`.
pub fn ml_matrix(params: MlParams, t: f64, spec: &SpectralData) -> Result<DMatrix<f64>> {
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!("time must be finite and nonnegative, got {t}")));
    }
    ml_matrix_scaled(params, t.powf(params.alpha()), spec)
}

/// `E_{alpha,beta}(s A)` for a scale `s >= 0`.
///
/// On each block `lambda I + N` the function is the finite Taylor sum
/// `sum_l s^l E^{(l)}(lambda s) N^l / l!`.
pub fn ml_matrix_scaled(params: MlParams, s: f64, spec: &SpectralData) -> Result<DMatrix<f64>> {
    let d = spec.dim();
    if s == 0.0 {
        return Ok(DMatrix::identity(d, d) * rgamma(params.beta()));
    }
    let w = spec.eigenvectors();
    let w_inv = spec.basis_inverse();
    let mut out = DMatrix::<Complex64>::zeros(d, d);
    let mut largest = 0.0f64;
    for b in spec.blocks() {
        let mut f = DMatrix::<Complex64>::zeros(b.size, b.size);
        let mut n_pow = DMatrix::<Complex64>::identity(b.size, b.size);
        let mut coef = 1.0;
        for l in 0..b.index {
            if l > 0 {
                n_pow = &n_pow * &b.nilpotent;
                coef *= s / l as f64;
            }
            let e = ml_derivative(params, b.eigenvalue * s, l)? * coef;
            largest = largest.max(e.norm());
            f += &n_pow * e;
        }
        let cols = w.columns(b.start, b.size);
        let rows = w_inv.rows(b.start, b.size);
        out += cols * f * rows;
    }
    let re = out.map(|z| z.re);
    let norm = re.norm();
    if !norm.is_finite() {
        return Err(Error::Overflow(format!("E_({},{})(sA) at s = {s}", params.alpha(), params.beta())));
    }
    let residue = out.iter().fold(0.0f64, |m, z| m.max(z.im.abs()));
    // round-off of the basis change alone produces an imaginary part of
    // order eps * cond(W) * max|f(lambda)|
    let floor = 1e-13 * spec.condition_estimate() * largest;
    if residue > 1e-9 * norm + floor {
        return Err(Error::ImaginaryResidue { residue, norm });
    }
    Ok(re)
}
