use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Tensor shapes are incompatible for the requested operation.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A bag has no real instances where at least one is required.
    #[error("degenerate bag: {0}")]
    DegenerateBag(String),

    /// A token id falls outside the embedding table.
    #[error("vocabulary error: {0}")]
    Vocabulary(String),

    /// A configuration value violates its invariants.
    #[error("invalid config: {0}")]
    Config(String),

    /// Input data violates a dataset-level precondition.
    #[error("data error: {0}")]
    Data(String),

    /// An API contract was violated by the caller.
    #[error("contract violation: {0}")]
    Contract(String),

    /// Synthetic generation could not satisfy its target.
    #[error("generation failed: {0}")]
    Generation(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
