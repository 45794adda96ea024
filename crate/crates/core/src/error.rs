use thiserror::Error;

/// Errors reported by the library. Resource-cap errors are kept distinct from
/// input errors so callers can map them to different exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("rank must be at least 3, got {0}")]
    RankTooSmall(usize),

    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("degree {0} has no zero component")]
    NoZeroComponent(String),

    #[error("degree subtraction would go negative: {0} - {1}")]
    IncomparableDegrees(String, String),

    #[error("expected a level-0 root, got {0}")]
    LevelNotZero(String),

    #[error("invalid window {0}: {1}")]
    InvalidWindow(String, String),

    #[error("cannot parse {what} from `{input}`: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("element length {length} exceeds the subword-enumeration cap {cap}")]
    LowerIntervalCap { length: usize, cap: usize },

    #[error("degree sum {sum} exceeds the search budget cap {cap}")]
    BudgetCap { sum: i64, cap: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
