//! Error type shared across the library.

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors reported by constructors, parsers and guarded operations.
///
/// Internal arithmetic consistency (exact divisions in the spectral counting
/// formulas, theorem-backed certificate patterns) is enforced with assertions
/// instead: a failure there is a library bug, not a caller mistake.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("order {n} is invalid: {reason}")]
    InvalidOrder { n: usize, reason: &'static str },

    #[error("arc bit string for n = {n} must have length {expected}, got {got}")]
    ArcLength {
        n: usize,
        expected: usize,
        got: usize,
    },

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("vertex {v} out of range for order {n}")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{q} is not prime")]
    NotPrime { q: u64 },

    #[error("{q} is not congruent to 3 mod 4")]
    BadResidue { q: u64 },

    #[error("unknown builtin tournament '{0}'")]
    UnknownBuiltin(String),

    #[error("exhaustive search supports orders {min}..={max}, got {n}")]
    SearchOrder { n: usize, min: usize, max: usize },

    #[error("checkpoint file does not match this search: {0}")]
    CheckpointMismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("malformed checkpoint file: {0}")]
    CheckpointFormat(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
