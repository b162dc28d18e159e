use motivic_core::Error;

/// Failure of a CLI invocation, carrying its process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("unsupported range: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0} check(s) failed")]
    VerifyFailed(usize),
}

impl CliError {
    /// 0 success, 1 verification failure, 2 input or schema error,
    /// 3 unsupported range.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Unsupported(_) | CliError::Core(Error::UnsupportedRange(_)) => 3,
            CliError::VerifyFailed(_)
            | CliError::Core(Error::Integrality(_))
            | CliError::Core(Error::ClosedFormMismatch(_))
            | CliError::Core(Error::Pole(_)) => 1,
            CliError::Core(_) => 2,
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(format!("malformed JSON: {e}"))
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}
