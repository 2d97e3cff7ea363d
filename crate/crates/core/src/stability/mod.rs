//! Stability certificates for `D^alpha x = A x + f(t, x)`: the q-integrals,
//! the uniform-smallness threshold, the beta-norm contraction estimate for
//! decaying perturbations, the combined classification and a boundedness
//! probe for linear time-varying systems.

mod beta;
mod boundedness;
mod q;
mod report;
mod thresholds;

pub use beta::{beta_norm_certificate, m_pair, BetaCertificate, MPair, BETA_TARGET, BETA_TOLERANCE, PROBE_COUNT};
pub use boundedness::{boundedness_probe, BoundednessReport, GROWTH_TOLERANCE, MIN_PROBE_HORIZON};
pub use q::{compute_q_linear, compute_q_nonlinear, QEstimate, QMode, Q_HORIZON_EXPONENTS};
pub use report::{classify, ClassifyOptions, SectorSummary, StabilityReport, Verdict};
pub use thresholds::{delta_of_epsilon, epsilon_threshold};
