use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error("invalid arguments: {0}")]
    InvalidArguments(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported certificate: rank target {0} (only 1 and 3 are available)")]
    UnsupportedCertificate(u32),
    #[error("instance too large for exhaustive mode: {0}")]
    TooLarge(String),
    #[error("unknown suite `{0}` (expected smoke, paper-small or paper-full)")]
    UnknownSuite(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
