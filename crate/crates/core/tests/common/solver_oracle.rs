//! Trajectory reference values computed offline with mpmath
//! (see oracle/solver_oracle.py).
#![allow(dead_code)]

/// (alpha, E_alpha(-5^alpha)): the scalar solution x' = -x at t = 5
pub const DECAY_AT_5: &[(f64, f64)] = &[
    (0.3, 0.33718503660738613),
    (0.4, 0.2841800444866188),
    (0.5, 0.23232629437646507),
    (0.6, 0.18200051379323623),
    (0.7, 0.1336510353944692),
    (0.8, 0.08782743029328506),
];

/// 1 - E_{1/2}(-2) = int_0^4 s^{-1/2} E_{1/2,1/2}(-s^{1/2}) ds
pub const CONV_HALF_AT_4: f64 = 0.7446043236894943;
