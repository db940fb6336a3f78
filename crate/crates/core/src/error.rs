use thiserror::Error;

/// Default upper bound on the order of any group the library will build.
pub const DEFAULT_ORDER_CAP: usize = 48;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group of order {order} exceeds the configured cap of {cap}")]
    OrderCap { order: usize, cap: usize },

    /// Raised while enumerating a generated group, before its order is known.
    #[error("group has more than {cap} elements, the configured cap")]
    AboveCap { cap: usize },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("elements {0:?} do not form a subgroup")]
    NotSubgroup(Vec<usize>),

    /// The vector is not in the image of the mark homomorphism.
    #[error("mark vector is not integral at basis index {index}")]
    NotIntegral { index: usize },

    #[error("groups do not match: {0}")]
    Mismatch(String),

    #[error("{0} is not a Frobenius complement")]
    NotFrobeniusComplement(String),

    #[error("unknown label {0:?}")]
    UnknownLabel(String),

    /// Two computations that must agree did not.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
