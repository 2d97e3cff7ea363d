//! Numerical tools for Caputo fractional systems `D^alpha x = A x + f(t, x)`:
//! Mittag-Leffler functions, matrix functions, solvers and stability
//! certificates.

// `!(x > 0.0)` is how NaN gets rejected along with the out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod matfun;
pub mod norm;
pub mod quad;
pub mod solver;
pub mod special_fn;
pub mod stability;

pub use error::{Error, Result};
