use thiserror::Error;

/// Which argument of an operation moved when an order-compatibility check failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `a <= b` but `a γ c` is not below `b γ c`.
    Left,
    /// `a <= b` but `c γ a` is not below `c γ b`.
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Left => f.write_str("left"),
            Side::Right => f.write_str("right"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid name `{0}`")]
    InvalidName(String),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("carrier must be nonempty")]
    EmptyCarrier,
    #[error("gamma list must be nonempty")]
    EmptyGammas,
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("unknown gamma `{0}`")]
    UnknownGamma(String),
    #[error("table incomplete: {0}")]
    TableIncomplete(String),
    #[error("order is not antisymmetric: {0} <= {1} and {1} <= {0}")]
    NotAntisymmetric(String, String),
    #[error("order incompatible ({side} side): {a} <= {b} but fails for c={c}, gamma={gamma}")]
    Incompatible {
        a: String,
        b: String,
        c: String,
        gamma: String,
        side: Side,
    },
    #[error("subset must be nonempty for ideal predicates")]
    EmptySubset,
    #[error("threshold {0} is outside [0,1]")]
    ThresholdOutOfRange(String),
    #[error("invalid membership grade `{0}`")]
    InvalidGrade(String),
    #[error("fuzzy subset carrier does not match the structure carrier")]
    CarrierMismatch,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("product would have {size} elements, above the limit of {limit}")]
    SizeLimit { size: usize, limit: usize },
    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
