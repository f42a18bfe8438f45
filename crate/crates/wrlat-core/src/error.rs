use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid conductor: {0}")]
    InvalidConductor(String),
    #[error("invalid quartic parameters: {0}")]
    InvalidQuartic(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("element is not integral")]
    NotIntegral,
    #[error("ideals belong to different fields")]
    FieldMismatch,
    #[error("matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("generators span the zero module")]
    ZeroIdeal,
    #[error("prime {0} is too large for subspace enumeration")]
    PrimeTooLarge(u64),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
