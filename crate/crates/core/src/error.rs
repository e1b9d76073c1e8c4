use thiserror::Error;

/// Blade literal grammar, quoted in parse diagnostics.
pub const LITERAL_GRAMMAR: &str = r#"[+-]? ( "1" | "e" [1-9]+ )"#;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed blade literal `{0}`; expected {LITERAL_GRAMMAR}")]
    MalformedLiteral(String),

    #[error("index {index} in `{literal}` is out of range 1..={dim}")]
    IndexOutOfRange {
        literal: String,
        index: usize,
        dim: u8,
    },

    #[error("vector index {index} is out of range 1..={dim}")]
    FactorOutOfRange { index: usize, dim: u8 },

    #[error("dimension {0} is out of range 1..=16")]
    BadDimension(usize),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(u8, u8),

    #[error("invalid generator list: {0}")]
    InvalidGenerators(String),

    #[error("group order {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("exhaustive enumeration supports dimension 1..=7, got {0}")]
    EnumerationDimension(u8),

    #[error("generator cap {cap} is out of range 0..={max} for dimension {dim}")]
    CapOutOfRange { cap: usize, max: usize, dim: u8 },

    #[error("table id {0} is out of range 1..=10")]
    TableOutOfRange(u8),

    #[error("tables require a report enumerated at dimension 3 with at least 3 generators (got dimension {dim}, cap {cap})")]
    NotReferenceReport { dim: u8, cap: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
