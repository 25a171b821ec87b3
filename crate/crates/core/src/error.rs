use thiserror::Error;

use crate::weyl::SignHom;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported algebra: {0}")]
    UnsupportedAlgebra(String),

    #[error("sign homomorphism {0} undefined for a root system with one root length")]
    SignHomUndefined(SignHom),

    #[error("function type {0} is not available for {1}")]
    TypeUnavailable(String, String),

    #[error("unknown function type: {0}")]
    UnknownType(String),

    #[error("Weyl group of order {0} exceeds the enumeration limit {1}")]
    GroupTooLarge(u128, usize),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("point not reduced: it lies outside the fundamental domain")]
    PointNotReduced,

    #[error("point lies outside the domain")]
    OutsideDomain,

    #[error("resolution factor M must be positive")]
    ZeroResolution,

    #[error("no reflection is needed for the trivial sign homomorphism")]
    NoReflection,

    #[error("no closed form for {0}; use enumeration")]
    NoClosedForm(String),

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("computation budget exceeded ({cost} > {budget}); try a smaller M")]
    BudgetExceeded { cost: u128, budget: u128 },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("arithmetic overflow in exact coordinates")]
    Overflow,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
