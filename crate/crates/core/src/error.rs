use thiserror::Error;

/// Errors surfaced by the counting engines and constructions.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid set literal `{input}`: {reason}")]
    ParseSet { input: String, reason: String },

    #[error("brute-force oracle rejects n={n}: above cap {cap}")]
    OracleCap { n: u64, cap: u64 },

    #[error("checkpoint {checkpoint} beyond materialized cap {cap}")]
    CheckpointBeyondCap { checkpoint: u64, cap: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
