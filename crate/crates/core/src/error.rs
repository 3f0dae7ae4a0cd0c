use thiserror::Error;

/// Errors raised by the library. Domain violations that are data (for
/// example an invalid filling) are reported through
/// [`ValidationReport`](crate::tableau::ValidationReport) instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters (g={g}, r={r}, d={d}): {reason}")]
    InvalidParams {
        g: i64,
        r: i64,
        d: i64,
        reason: String,
    },

    #[error("degenerate Serre dual of (g={g}, r={r}, d={d}): {reason}")]
    DegenerateDual {
        g: i64,
        r: i64,
        d: i64,
        reason: String,
    },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("enumeration refused: {cells} cells exceeds the budget of {budget}")]
    BudgetExceeded { cells: usize, budget: usize },

    #[error("index {index} appears {count} times; only doubled indices are supported")]
    UnsupportedMultiplicity { index: usize, count: usize },

    #[error(
        "index {index} repeats at grid distance {distance}, which no torsion order can realize"
    )]
    ImpossibleFilling { index: usize, distance: usize },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("inconsistent limit series table: {0}")]
    InconsistentTable(String),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("certificate failure: {0}")]
    Certificate(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("unsupported format_version {found} (expected {expected})")]
    FormatVersion { found: u64, expected: u64 },

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
