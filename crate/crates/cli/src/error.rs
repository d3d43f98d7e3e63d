use cotilt_core::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    Invalid(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error(transparent)]
    Core(#[from] Error),
}

/// Process exit statuses.
pub mod exit {
    pub const TRUE: i32 = 0;
    pub const FALSE: i32 = 1;
    pub const INPUT: i32 = 2;
    pub const CAPABILITY: i32 = 3;
    pub const INCONSISTENCY: i32 = 4;
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Invalid(_) | CliError::Io { .. } => exit::INPUT,
            CliError::Core(e) => match e {
                Error::Capability(_) | Error::IncompleteRegistry(_) => exit::CAPABILITY,
                Error::Inconsistency(_) => exit::INCONSISTENCY,
                _ => exit::INPUT,
            },
        }
    }
}
