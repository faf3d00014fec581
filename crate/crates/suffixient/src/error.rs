use thiserror::Error;

/// Errors surfaced by the pipeline and the CLI.
#[derive(Debug, Error)]
pub enum Error {
    #[error("input is empty")]
    EmptyInput,

    #[error("sentinel violation: {0}")]
    SentinelViolation(String),

    #[error("alphabet is unary after sentinel handling")]
    UnaryAlphabet,

    #[error("input of length {n} exceeds the cap of {cap} for this operation")]
    SizeLimit { n: usize, cap: usize },

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("triple stream exhausted")]
    Exhausted,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit status for the CLI: 1 verification failure, 2 input
    /// error, 3 size limit.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::VerificationFailed(_) => 1,
            Error::SizeLimit { .. } => 3,
            Error::EmptyInput
            | Error::SentinelViolation(_)
            | Error::UnaryAlphabet
            | Error::Exhausted
            | Error::Io(_) => 2,
        }
    }
}
