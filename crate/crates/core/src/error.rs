use thiserror::Error;

/// Error type shared across the tensor engine, model, data and training layers.
#[derive(Debug, Error)]
pub enum Error {
    /// Tensor shapes or dimensions do not line up; the message names the offending dimension.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// A configuration value is invalid (channel plan, image size, split counts, ...).
    #[error("invalid configuration: {0}")]
    Config(String),

    /// A serialized container or checkpoint file is malformed or inconsistent.
    #[error("format error: {0}")]
    Format(String),

    /// Dataset ingestion failed; the message carries the per-file report.
    #[error("dataset error: {0}")]
    Data(String),

    /// A numerical failure (NaN loss or gradient) aborted an operation.
    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
