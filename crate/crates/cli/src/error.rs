use thiserror::Error;

/// Failures of a command, each mapped to a process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed flags, labels or parameters.
    #[error("bad input: {0}")]
    BadInput(String),
    /// A block is larger than the dimension guard allows.
    #[error("refused: {0}")]
    Guard(String),
    /// At least one verification item failed.
    #[error("{0} verification item(s) failed")]
    Verification(usize),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// `1` verification failure, `2` guard refusal, `3` bad input.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Guard(_) => 2,
            CliError::BadInput(_) | CliError::Io(_) => 3,
        }
    }
}

impl From<cycloribbon::Error> for CliError {
    fn from(e: cycloribbon::Error) -> Self {
        match e {
            cycloribbon::Error::GuardExceeded { .. } => CliError::Guard(e.to_string()),
            other => CliError::BadInput(other.to_string()),
        }
    }
}
