use thiserror::Error;

/// Crate-wide error type. The CLI maps variants onto its exit-code contract:
/// usage/config -> 1, data format -> 2, numeric/shape/contract -> 3.
#[derive(Debug, Error)]
pub enum Error {
    /// Tensor dimension mismatch, with the offending op and axes spelled out.
    #[error("dimension error in {op}: {detail}")]
    Dim { op: &'static str, detail: String },

    /// Non-finite values or other numeric contract violations.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// API misuse: wrong call order, duplicate domains, missing gradients.
    #[error("usage error: {0}")]
    Usage(String),

    /// Invalid configuration or generator spec.
    #[error("config error: {0}")]
    Config(String),

    /// On-disk format violation, with the byte offset where parsing failed.
    #[error("format error at byte {offset}: {detail}")]
    Format { offset: u64, detail: String },

    /// Freeze/decoupling contract violated during a protocol phase.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn dim(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Dim { op, detail: detail.into() }
    }

    /// Exit code per the CLI contract: 1 usage/config, 2 data format, 3 numeric failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) | Error::Config(_) => 1,
            Error::Format { .. } | Error::Io(_) => 2,
            Error::Dim { .. } | Error::Numeric(_) | Error::Contract(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
