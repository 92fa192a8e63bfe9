//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{what} too large for enumeration: {got} exceeds limit {limit}")]
    TooLarge { what: &'static str, got: u64, limit: u64 },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("product bra covers {got} qubits, state has {want}")]
    CoverageMismatch { got: usize, want: usize },

    #[error("states are not related by a Pauli operator")]
    NotPauliEquivalent,

    #[error("pattern does not prepare the target state: {0}")]
    PatternMismatch(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
