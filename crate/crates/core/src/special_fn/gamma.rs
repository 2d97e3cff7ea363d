//! Gamma function and its reciprocal/logarithm on the real line.
//!
//! Stirling's series for x >= 10, evaluated with the power factor split in
//! two so it stays finite up to the largest representable value; smaller
//! arguments are shifted up by the recurrence Gamma(x + 1) = x Gamma(x), and
//! negative ones reflected. Integers get exact factorials.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// ln(sqrt(2 pi)).
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Largest x with a finite Gamma(x).
pub const GAMMA_MAX_ARG: f64 = 171.624_376_956_302_7;

/// Stirling threshold.
const STIRLING_MIN: f64 = 10.0;

/// B_{2k} / (2k (2k - 1)), k = 1..8.
const STIRLING_COEF: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// ln Gamma(x) - [(x - 1/2) ln x - x + ln sqrt(2 pi)] for x >= 10.
fn stirling_correction(x: f64) -> f64 {
    let r = 1.0 / (x * x);
    let mut acc = 0.0;
    for c in STIRLING_COEF.iter().rev() {
        acc = acc * r + c;
    }
    acc / x
}

/// Gamma(x) for x > 0 without domain checks.
fn gamma_upper(x: f64) -> f64 {
    if x == x.floor() && x <= 171.0 {
        return (2..x as usize).map(|k| k as f64).product();
    }
    if x >= STIRLING_MIN {
        let half_pow = x.powf(0.5 * (x - 0.5));
        return (2.0 * PI).sqrt() * half_pow * (-x).exp() * half_pow * stirling_correction(x).exp();
    }
    let mut y = x;
    let mut prod = 1.0;
    while y < STIRLING_MIN {
        prod *= y;
        y += 1.0;
    }
    gamma_upper(y) / prod
}

/// Gamma(x) for real positive x.
///
/// Fails with a domain error for `x <= 0` (and NaN), and with an overflow
/// error once Gamma(x) exceeds the f64 range.
pub fn gamma(x: f64) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return Err(Error::Domain(format!("gamma({x}) requires x > 0")));
    }
    if x > GAMMA_MAX_ARG {
        return Err(Error::Overflow(format!("gamma({x})")));
    }
    Ok(gamma_real(x))
}

/// Gamma on the whole real line (poles yield infinities), no error reporting.
pub(crate) fn gamma_real(x: f64) -> f64 {
    if x < 0.5 {
        if x == x.floor() {
            return f64::INFINITY;
        }
        PI / ((PI * x).sin() * gamma_upper(1.0 - x))
    } else if x > GAMMA_MAX_ARG {
        f64::INFINITY
    } else {
        gamma_upper(x)
    }
}

/// ln Gamma(x) for x > 0.
pub fn ln_gamma(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x < 0.5 {
        // ln Gamma(x) = ln(pi / sin(pi x)) - ln Gamma(1 - x)
        return (PI / (PI * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    if x < STIRLING_MIN {
        return gamma_upper(x).ln();
    }
    (x - 0.5) * x.ln() - x + LN_SQRT_2PI + stirling_correction(x)
}

/// 1 / Gamma(x) for any real x; zero at the poles 0, -1, -2, ...
pub fn rgamma(x: f64) -> f64 {
    if x >= 0.5 {
        if x > GAMMA_MAX_ARG {
            return (-ln_gamma(x)).exp();
        }
        return 1.0 / gamma_upper(x);
    }
    if x == x.floor() {
        return 0.0;
    }
    // 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi
    let s = sin_pi(x);
    let y = 1.0 - x;
    if y > GAMMA_MAX_ARG {
        let mag = (ln_gamma(y) + s.abs().ln() - PI.ln()).exp();
        return mag.copysign(s);
    }
    s * gamma_upper(y) / PI
}

/// ln|1/Gamma(x)| and the sign of 1/Gamma(x); `None` at the poles.
pub(crate) fn ln_abs_rgamma(x: f64) -> Option<(f64, f64)> {
    if x >= 0.5 {
        return Some((-ln_gamma(x), 1.0));
    }
    if x == x.floor() {
        return None;
    }
    let s = sin_pi(x);
    Some((ln_gamma(1.0 - x) + s.abs().ln() - PI.ln(), s.signum()))
}

/// sin(pi x) with exact zeros at the integers and reduced argument.
fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (0.5 * x).floor(); // r in [0, 2)
    let (r, sign) = if r > 1.0 { (r - 1.0, -1.0) } else { (r, 1.0) };
    let r = if r > 0.5 { 1.0 - r } else { r };
    sign * (PI * r).sin()
}
