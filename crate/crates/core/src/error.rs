use thiserror::Error;

use crate::coeff::FieldTag;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("mixed coefficient fields: {0} and {1}")]
    MixedFields(FieldTag, FieldTag),
    #[error("division by zero")]
    DivisionByZero,
    #[error("unknown field `{0}` (expected q, gf2 or gf3)")]
    UnknownField(String),
    #[error("left-normed commutator needs at least 2 arguments, got {0}")]
    TooFewArguments(usize),
    #[error("polynomial over {poly} cannot be evaluated in an algebra over {algebra}")]
    FieldMismatch { poly: FieldTag, algebra: FieldTag },
    #[error("the Grassmann construction requires characteristic other than 2")]
    CharacteristicTwo,
    #[error("element does not belong to the declared algebra: {0}")]
    HandleMismatch(String),
    #[error("element has a term outside the derived subgroup algebra")]
    NotInDerivedSubalgebra,
    #[error("generator index {index} exceeds the support bound {bound}")]
    SupportExceeded { index: u32, bound: u32 },
    #[error("commutator length must be at least 2, got {0}")]
    LengthTooSmall(usize),
    #[error("input does not have the required shape: {0}")]
    ShapeViolation(String),
    #[error("degree {degree} exceeds the configured limit {limit}")]
    DegreeTooLarge { degree: usize, limit: usize },
    #[error("target is not multilinear in x1..x{0}")]
    NotMultilinear(usize),
    #[error("unsupported parameters: {0}")]
    UnsupportedParameters(String),
}

pub type Result<T> = std::result::Result<T, Error>;
