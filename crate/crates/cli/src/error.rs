use fracstab::Error;
use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum CliError {
    /// Malformed or inconsistent input; exit status 2.
    #[error("{0}")]
    Input(String),
    /// A numerical routine failed; exit status 3.
    #[error("numerical failure: {0}")]
    Numerical(Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_INCONCLUSIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Io(_) => EXIT_INPUT,
            CliError::Numerical(_) => EXIT_NUMERICAL,
        }
    }
}

impl From<Error> for CliError {
    /// Errors caused by what the user asked for are input errors; the rest
    /// are failures of the numerics on valid input.
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_)
            | Error::InvalidInput(_)
            | Error::DimensionMismatch { .. }
            | Error::SectorViolation { .. }
            | Error::WrongPerturbationKind { .. }
            | Error::Defective { .. }
            | Error::GridMismatch(_) => CliError::Input(e.to_string()),
            _ => CliError::Numerical(e),
        }
    }
}
