use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid triangle: {0}")]
    InvalidTriangle(String),
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),
    #[error("invalid unit: k must be at least 1, got {0}")]
    InvalidUnit(i64),
    #[error("unsupported unit: operation requires k = 1, got k = {0}")]
    UnsupportedUnit(u64),
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    /// A violated internal invariant. Never produced by valid input.
    #[error("internal consistency violation: {0}")]
    Consistency(String),
}

impl Error {
    /// True for errors that signal a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Consistency(_))
    }
}
