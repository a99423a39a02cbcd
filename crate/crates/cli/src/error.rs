use thiserror::Error;

/// Process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] uep_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("output: {0}")]
    Output(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use uep_core::Error as E;
        match self {
            CliError::Core(e) => match e {
                E::Domain(_) | E::InvalidParams(_) | E::Parse { .. } => EXIT_USAGE,
                E::Infeasible(_)
                | E::CapExceeded { .. }
                | E::Precondition(_)
                | E::Disconnected
                | E::NotFound { .. } => EXIT_INFEASIBLE,
                E::Internal(_) => 1,
            },
            CliError::Usage(_) | CliError::Io { .. } => EXIT_USAGE,
            CliError::Verification(_) => EXIT_VERIFY,
            CliError::Output(_) => 1,
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
