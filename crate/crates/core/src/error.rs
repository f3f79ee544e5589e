use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("p = {p} does not divide m = {m}")]
    Divisibility { m: u32, p: u32 },

    #[error("generating set {genset} is not valid for G({m},{p},{n}): {reason}")]
    GensetMismatch {
        m: u32,
        p: u32,
        n: usize,
        genset: String,
        reason: String,
    },

    #[error("elements belong to different groups")]
    SpecMismatch,

    #[error("malformed element text `{text}`: {reason}")]
    ParseElement { text: String, reason: String },

    #[error("group order {order} exceeds the element cap {cap}")]
    GroupCapExceeded { order: u128, cap: u128 },

    #[error("word enumeration exceeded the cap of {cap} words")]
    WordCapExceeded { cap: usize },

    #[error("commutation-class closure exceeded the cap of {cap} words")]
    ClassCapExceeded { cap: usize },

    #[error("operation not supported for this generating set: {0}")]
    UnsupportedSpec(String),

    #[error("inexact division: {num} is not divisible by {den}")]
    InexactDivision { num: String, den: String },

    #[error("invalid cycle type: {0}")]
    InvalidCycleType(String),

    #[error("length-table cache mismatch: {0}")]
    CacheMismatch(String),

    #[error("table {0} has no embedded fixture for {1}")]
    UnknownTableColumn(String, String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
