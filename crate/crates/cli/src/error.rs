use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("line {line}, field `{field}`: {message}")]
    Spec {
        line: usize,
        field: String,
        message: String,
    },
    #[error(transparent)]
    Core(#[from] semica_core::Error),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("unknown example `{0}` (see `semica list-examples`)")]
    UnknownExample(String),
    #[error("{0}")]
    Usage(String),
    #[error("internal error: {0} certificate failed replay")]
    ReplayFailed(&'static str),
}

impl CliError {
    pub(crate) fn spec(line: usize, field: &str, message: impl Into<String>) -> Self {
        CliError::Spec {
            line,
            field: field.to_string(),
            message: message.into(),
        }
    }

    /// 2 for an exhausted budget, 3 for a failed replay, 1 for anything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_budget() => 2,
            CliError::ReplayFailed(_) => 3,
            _ => 1,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
