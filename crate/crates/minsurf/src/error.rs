use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Weierstrass data fails a well-definedness requirement.
    #[error("invalid surface data: {0}")]
    InvalidData(String),

    /// Mesh construction or mesh-based analysis cannot proceed.
    #[error("mesh error: {0}")]
    Mesh(String),

    /// A root of the metric degenerates on or too close to a boundary circle.
    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
