use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("table too small: G({k}, {m}) requested but the table stops at k = {k_max}")]
    TableTooSmall { k: usize, m: usize, k_max: usize },

    #[error("G(k) is undefined for k = {k} (requires k >= 2)")]
    UndefinedIndex { k: usize },

    #[error("illegal move at ({i}, {j})")]
    IllegalMove { i: usize, j: usize },

    #[error("malformed board text on line {line}: {reason}")]
    BoardParse { line: usize, reason: String },

    #[error("search exhausted its state budget of {limit}; levels complete through {last_complete} pebbles")]
    ResourceExhausted { limit: usize, last_complete: usize },

    #[error("series is not invertible over the integers (leading coefficient {leading})")]
    NotInvertible { leading: String },

    #[error("an exact polynomial has no finite inverse; truncate it first")]
    UnboundedOrder,

    #[error("series order {order} is too small, coefficient of z^{needed} is required")]
    OrderTooSmall { order: i64, needed: i64 },

    #[error(
        "coefficient of z^{k} for m = {m} is negative ({value}); the generating function is wrong"
    )]
    NegativeCoefficient { k: usize, m: usize, value: String },

    #[error("W(l) is below the minimal configuration count for l = {l} (requires l >= 2)")]
    BelowMinimal { l: usize },

    #[error("root structure unexpected: {sign_changes} sign changes of S on the scan grid")]
    RootStructure { sign_changes: usize },

    #[error("sign of S({z}) cannot be resolved at the current series order")]
    UnresolvedSign { z: String },

    #[error("series tail bound 1e{log10_bound:.1} cannot reach the target 1e-{digits}; raise the series order")]
    PrecisionUnreachable { log10_bound: f64, digits: usize },

    #[error("argument z = {z} is outside (0, 1/2)")]
    OutOfDomain { z: String },

    #[error("{0}")]
    Numeric(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
