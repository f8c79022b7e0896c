use thiserror::Error;

use crate::root_data::Family;

/// Errors raised by the library. Verification outcomes are never errors;
/// they are reported as verdicts.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank {rank} is out of range for type {family}")]
    RankOutOfRange { family: Family, rank: usize },
    #[error("Weyl group of type {family}{rank} has order {order}, above the size guard {guard}")]
    SizeGuard {
        family: Family,
        rank: usize,
        order: u128,
        guard: u128,
    },
    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },
    #[error("too many variables: {0} (at most {max})", max = crate::exact::MAX_VARS)]
    TooManyVariables(usize),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("bilinear form is degenerate")]
    DegenerateForm,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("invalid Jordan type {jordan_type:?} for type {family}{rank}")]
    InvalidJordanType {
        family: Family,
        rank: usize,
        jordan_type: Vec<usize>,
    },
    #[error("index {index} out of range (expected 1..={max})")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("length polynomial does not factor into q-integers: {0}")]
    Factorization(String),
    #[error("series coefficient is not a nonnegative integer at degree {degree}: {value}")]
    NonIntegralSeries { degree: usize, value: String },
    #[error("exterior power {i} out of range for rank {rank}")]
    ExteriorPower { i: usize, rank: usize },
    #[error("function is not constant on conjugacy classes: {0}")]
    NotClassFunction(String),
    #[error("check {check} is not available for type {family}")]
    UnsupportedCheck { check: String, family: Family },
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
