//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("design is empty")]
    EmptyDesign,

    #[error("row {row}: expected {expected} entries, found {found}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("row {row}: invalid token `{token}`")]
    InvalidToken { row: usize, token: String },

    #[error("row {row} duplicates an earlier run")]
    DuplicateRun { row: usize },

    #[error("entry ({row}, {col}) is {value}; levels must be -1 or +1")]
    InvalidLevel { row: usize, col: usize, value: i8 },

    #[error("design must have at least one factor")]
    NoFactors,

    #[error("{factors} factors exceeds this operation's cap of {max}")]
    TooManyFactors { factors: usize, max: usize },

    #[error("run size {r} exceeds the `2^s = {space}` distinct points available")]
    RunsExceedSpace { r: u64, space: u64 },

    #[error("point has {got} coordinates, design has {expected} factors")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("polynomial is not a 0/1 indicator: value {value} at point index {point}")]
    NotAnIndicator { point: usize, value: String },

    #[error("matrix is singular")]
    Singular,

    #[error("{name} bound needs run size r = {expected} (mod 4), got r = {r}")]
    WrongResidue {
        name: &'static str,
        r: u64,
        expected: u64,
    },

    #[error("run size r = {r} out of range for this operation (needs r >= {min})")]
    RunsTooSmall { r: u64, min: u64 },

    #[error("search space of {candidates} candidates exceeds budget {budget}")]
    BudgetExceeded { candidates: u128, budget: u128 },

    #[error("exhaustive saturated search is capped at r = {max}, got r = {r}")]
    SaturatedTooLarge { r: u64, max: u64 },

    #[error("no built-in maximal-determinant target for r = {r}")]
    NoKnownTarget { r: u64 },
}
