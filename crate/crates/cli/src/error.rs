use thiserror::Error;

/// Failure of a CLI command, carrying its process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("verification failed: {0}")]
    Verify(String),
    #[error(transparent)]
    Core(#[from] chtri::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Verify(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io { .. } => 3,
            CliError::Core(e) => match e {
                chtri::Error::BadParameter(_)
                | chtri::Error::BadRadius(_)
                | chtri::Error::NoSuchTriangle
                | chtri::Error::UnsupportedType(_) => 2,
                _ => 1,
            },
        }
    }
}
