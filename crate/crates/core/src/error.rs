use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid configuration, scenario, or construction argument.
    #[error("config error: {0}")]
    Config(String),

    /// An action fell outside its declared bounds. Callers must clamp
    /// explicitly; environments never clamp silently.
    #[error("action out of bounds for agent {agent}: {detail}")]
    ActionBounds { agent: usize, detail: String },

    /// A priority score was NaN, which indicates a policy bug upstream.
    #[error("NaN priority score at index {0}")]
    NanScore(usize),

    /// Vector length or network shape mismatch.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// An agent id was used outside its environment's range.
    #[error("unknown agent id {0}")]
    UnknownAgent(usize),

    /// A rollout buffer operation needed data that was not there.
    #[error("empty rollout buffer")]
    EmptyBuffer,

    /// Training produced a non-finite loss; the dump carries diagnostics.
    #[error("numerical divergence: {0}")]
    Divergence(String),

    /// A distribution did not sum to one within tolerance.
    #[error("distribution not normalized: sums to {0}")]
    NotNormalized(f64),

    /// More slot contributors than the observation layout allows.
    #[error("too many propagated actions: {got} contributors but layout holds {max}")]
    SlotOverflow { got: usize, max: usize },

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
