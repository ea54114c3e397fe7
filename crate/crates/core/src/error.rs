use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("divisor must be a single nonzero term, got {len} terms")]
    NotMonomial { len: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("alpha may not carry a negative exponent")]
    NegativeAlpha,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("pole: {symbol} bound to 0 in term {term}")]
    Pole { symbol: &'static str, term: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("presentation mismatch: {left} vs {right}")]
    PresentationMismatch { left: String, right: String },
    #[error("rewrite fuel exhausted after {steps} steps while normal-ordering {word}")]
    FuelExhausted { word: String, steps: u64 },
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("negative exponent on non-grouplike generator {0}")]
    NegativeExponent(String),
    #[error("no basis conversion from {from} to {to}")]
    UnsupportedConversion { from: String, to: String },
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlowError {
    #[error("flow is singular at m = 0")]
    SingularFlow,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("unsupported generator {0} for this action")]
    UnsupportedGenerator(String),
    #[error("beta is not invertible: M acts non-invertibly")]
    BetaNotInvertible,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairingError {
    #[error("total degree {degree} exceeds the pairing cap {cap}")]
    DegreeCap { degree: u32, cap: u32 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
