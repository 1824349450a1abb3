use thiserror::Error;

/// Errors raised by the exact series and matrix machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series has zero constant term")]
    ZeroConstantTerm,
    #[error("inner series of a composition has nonzero constant term")]
    NonzeroInnerConstant,
    #[error("bad valuation: {0}")]
    BadValuation(&'static str),
    #[error("constant term {0} is not the square of a rational")]
    NonSquareConstant(String),
    #[error("insufficient order: need {needed}, have {available}")]
    InsufficientOrder { needed: usize, available: usize },
    #[error("Riordan pair is not proper (needs f0 != 0 and g1 != 0)")]
    NotProper,
    #[error("constant term must be 1, found {0}")]
    BadConstantTerm(String),
    #[error("index {0} is not supported for this family")]
    UnsupportedIndex(i64),
    #[error("polynomial of degree {degree} does not fit reversal length {n}")]
    DegreeTooHigh { degree: usize, n: usize },
    #[error("claimed polynomial has a nonzero coefficient at x^{0}")]
    NonPolynomialResidue(usize),
    #[error("odd power {0} of a radical survived the parity collapse")]
    ParityViolation(i64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
