//! Experiment runner behind the `fracstab` command: JSON configs in,
//! deterministic JSON reports and CSV tables out.

// `!(x > 0.0)` is how NaN gets rejected along with the out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod counterexample;
pub mod decay;
pub mod error;
pub mod output;
pub mod run;

pub use config::ExperimentConfig;
pub use counterexample::counterexample_run;
pub use decay::decay_fit;
pub use error::CliError;
pub use run::run;
