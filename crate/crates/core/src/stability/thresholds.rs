use crate::error::{Error, Result};
use crate::matfun::FracSystem;

/// `epsilon = 1 / (2 int_0^inf u^{alpha-1} ||E_{alpha,alpha}(u^alpha A)|| du)`:
/// perturbations with `sup_t ||Q(t)|| < epsilon` have `q <= 1/2`.
pub fn epsilon_threshold(sys: &FracSystem) -> Result<f64> {
    Ok(0.5 / sys.kernel_integral()?.value)
}

/// `delta = (1 - q) eps_ball / sup_t ||E_alpha(t^alpha A)||`: initial states
/// with `||x0|| <= delta` stay in the ball of radius `eps_ball`.
pub fn delta_of_epsilon(q: f64, eps_ball: f64, sys: &FracSystem) -> Result<f64> {
    if !(q < 1.0) {
        return Err(Error::ContractionTooLarge(q));
    }
    if !(q >= 0.0) {
        return Err(Error::InvalidInput(format!("q must be nonnegative, got {q}")));
    }
    if !(eps_ball > 0.0 && eps_ball.is_finite()) {
        return Err(Error::InvalidInput(format!("ball radius must be positive, got {eps_ball}")));
    }
    Ok((1.0 - q) * eps_ball / sys.sup_ea()?.value)
}
