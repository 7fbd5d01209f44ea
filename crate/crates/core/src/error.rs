use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("group closure exceeded the order cap of {cap}")]
    GroupOrderExceeded { cap: usize },

    #[error("zero vector given where a nonzero direction is required")]
    ZeroVector,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not invertible")]
    NotInvertible,

    #[error("coefficient {0} is not rational")]
    IrrationalCoefficient(String),

    #[error("Taylor degree {degree} exceeds the configured cap {cap}")]
    TaylorCapExceeded { degree: u32, cap: u32 },

    #[error("constraint stage {stage} is inconsistent")]
    InconsistentConstraints { stage: String },

    #[error("constraint stage {requested} cannot follow stage {current}")]
    StageOrder { current: String, requested: String },

    #[error("catalog entry {entry} failed: {predicate}")]
    Verification { entry: String, predicate: String },

    #[error("unknown field {name:?}; available: {available}")]
    UnknownField { name: String, available: String },

    #[error("non-finite value encountered: {0}")]
    NonFinite(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
