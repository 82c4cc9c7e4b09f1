use thiserror::Error as ThisError;

use crate::rational::Rational;

/// Everything that can go wrong in the library. Variants double as the
/// stable machine-readable error codes emitted by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error at byte {position}: {message}")]
    ParseError { position: usize, message: String },

    #[error("cs level takes a negative parameter, got {d}")]
    InvalidCsParameter { d: Rational },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("operands belong to different towers: `{left}` vs `{right}`")]
    TowerMismatch { left: String, right: String },

    #[error("element has zero norm and no inverse")]
    NotInvertible,

    #[error("conj(x)*x has a nonzero imaginary part")]
    NonScalarNorm,

    #[error("norm is {norm}, expected 1")]
    NormNotOne { norm: Rational },

    #[error("seed element is zero")]
    ZeroSeed,

    #[error("seed vector is all zeros")]
    AllZeroSeeds,

    #[error("seed vector has zero norm")]
    IsotropicSeed,
}

impl Error {
    /// Stable code string, used verbatim in CLI error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::ParseError { .. } => "ParseError",
            Error::InvalidCsParameter { .. } => "InvalidCsParameter",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::TowerMismatch { .. } => "TowerMismatch",
            Error::NotInvertible => "NotInvertible",
            Error::NonScalarNorm => "NonScalarNorm",
            Error::NormNotOne { .. } => "NormNotOne",
            Error::ZeroSeed => "ZeroSeed",
            Error::AllZeroSeeds => "AllZeroSeeds",
            Error::IsotropicSeed => "IsotropicSeed",
        }
    }
}
