use thiserror::Error;

/// Errors surfaced by the feasibility engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input violates a model's domain (non-positive dimension, discount
    /// rate at or below -100%, divisor out of range, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// A model was asked for a value outside its stated validity range.
    #[error("validity error: {0}")]
    Validity(String),
    /// A flight request falls outside a helicopter's operational envelope.
    #[error("envelope error: {0}")]
    Envelope(String),
    /// Configuration could not be parsed or is internally inconsistent.
    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
