use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by the numerical routines of this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument outside the domain: {0}")]
    Domain(String),

    #[error("result overflows the f64 range: {0}")]
    Overflow(String),

    #[error("quadrature failed its internal error estimate: {0}")]
    NonConvergence(String),

    #[error("derivative order {0} is not supported (maximum is 6)")]
    UnsupportedOrder(usize),

    #[error("lambda = {lambda} violates the sector condition |arg| > {bound:.6}")]
    SectorViolation { lambda: Complex64, bound: f64 },

    #[error(
        "matrix looks defective (eigenvector condition estimate {condition:.3e}); \
         declare its Jordan structure explicitly"
    )]
    Defective { condition: f64 },

    #[error("matrix function has an imaginary residue of {residue:.3e} (norm {norm:.3e})")]
    ImaginaryResidue { residue: f64, norm: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("state became non-finite at t = {t}")]
    NonFiniteState { t: f64 },

    #[error("fixed-point iteration did not converge after {iterations} iterations (last ratio {last_ratio:.4})")]
    NoConvergence { iterations: usize, last_ratio: f64 },

    #[error("operation needs a {expected} perturbation")]
    WrongPerturbationKind { expected: &'static str },

    #[error("contraction constant q = {0} is not below 1")]
    ContractionTooLarge(f64),

    #[error("Lipschitz envelope never falls below {threshold:.4e} on the searchable horizon")]
    NoDecay { threshold: f64 },

    #[error("trajectory grid does not match ({0})")]
    GridMismatch(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
