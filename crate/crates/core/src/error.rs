use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A tensor product would exceed the configured maximum dimension.
    #[error("dimension {requested} exceeds the configured maximum {max}")]
    Dimension { requested: usize, max: usize },

    /// Operand shapes do not fit together.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// An argument is outside what the operation accepts.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A numerical contract (Hermiticity, trace, positivity, norm, ...) is violated.
    #[error("contract violation: {0}")]
    Contract(String),

    /// Physical parameters outside their domain.
    #[error("parameter out of domain: {0}")]
    Domain(String),

    /// Inconsistent optimizer or sweep configuration.
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}
