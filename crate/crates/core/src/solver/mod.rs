//! Trajectories of `D^alpha x = A x + f(t, x)`: exact linear propagation,
//! the fractional Adams-Bashforth-Moulton scheme, Lyapunov-Perron
//! iteration and the closed-form Riemann-Liouville counterexample.

mod abm;
mod exact;
mod fixed_point;
mod perturbation;
mod trajectory;

pub use abm::{solve_abm, solve_abm_system, system_field};
pub use exact::{solve_linear_exact, solve_rl_scalar_exact};
pub(crate) use fixed_point::KernelPrimitives;
pub use fixed_point::{
    lyapunov_perron_iterate, residual_check, LyapunovPerronOperator, Residual, DEFAULT_MAX_ITER,
    DEFAULT_TOL,
};
pub use perturbation::{Envelope, PerturbationSpec};
pub use trajectory::{Method, Trajectory, TrajectoryMeta};
