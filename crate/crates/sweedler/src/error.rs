//! Error type shared by every module in the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// Requesting the antipode of a structure that is only a bialgebra.
    #[error("preset `{preset}` has no antipode")]
    NoAntipode { preset: String },

    /// A structure map was asked for a basis label (or pair) outside its domain.
    #[error("`{map}` is undefined at {at}")]
    Undefined { map: String, at: String },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// Two quantum-plane elements with different deformation parameters.
    #[error("mismatched q parameters: {left} vs {right}")]
    QMismatch { left: String, right: String },

    /// An exact value was demanded where only an approximation exists.
    #[error("exact value unavailable (approx only): {0}")]
    ApproxOnly(String),

    #[error("parse error at {pos}: expected {expected}, found {found}")]
    Parse {
        pos: usize,
        expected: String,
        found: String,
    },

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
}

impl Error {
    pub fn undefined(map: impl Into<String>, at: impl std::fmt::Display) -> Self {
        Error::Undefined {
            map: map.into(),
            at: at.to_string(),
        }
    }
}
