use thiserror::Error;

/// Errors surfaced by the algebra kernel and the numeric evaluator.
#[derive(Debug, Error)]
pub enum Error {
    /// A zeta-value evaluation was requested for a divergent (non-admissible) index.
    #[error("index {0} is not admissible (first entry must be >= 2)")]
    NotAdmissible(String),

    /// An xy-word cannot be written in the z-basis (it must be empty or end in y).
    #[error("xy-word {0} is not in the z-span (must be empty or end in y)")]
    NotZSpan(String),

    /// A letter lies outside the domain required by the operation.
    #[error("{0}")]
    Domain(String),

    /// Text input failed to parse.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
