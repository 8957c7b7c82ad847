use thiserror::Error;

use crate::halfint::HalfInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch { op: &'static str, left: (usize, usize), right: (usize, usize) },

    #[error("not divisible by h^{k}: coefficient of h^{power} is {coefficient}")]
    NotDivisibleByH { k: usize, power: usize, coefficient: String },

    #[error("not invertible: {0}")]
    NotInvertible(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("selection rule forbids ({j1}, {j2}) -> {j}")]
    SelectionRule { j1: HalfInt, j2: HalfInt, j: HalfInt },

    #[error("inconsistent result: {0}")]
    Inconsistent(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
