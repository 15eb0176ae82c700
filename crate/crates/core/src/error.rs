use thiserror::Error;

use crate::exact_linear::LinearError;
use crate::report::ConditionReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Linear(#[from] LinearError),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("precondition failed: {what}")]
    Precondition { what: String, report: Box<ConditionReport> },
    #[error("Z is not closed under {op}: witness {witness:?}")]
    Subalgebra { op: String, witness: Vec<usize> },
    #[error("Z is not an ideal: {op} leaves Z at witness {witness:?}")]
    NotAnIdeal { op: String, witness: Vec<usize> },
    #[error("images are not complementary at level {level}: rank {rank}, expected {expected}")]
    NotComplementary { level: usize, rank: usize, expected: usize },
    #[error("the {factor} image is not a subalgebra: {op} escapes at witness {witness:?}")]
    NotSubalgebra { factor: String, op: String, witness: Vec<usize> },
    #[error("factorization obstructed: {map} is nonzero at witness {witness:?}")]
    ObstructionNonzero { map: String, witness: Vec<usize> },
    #[error("search space of {count} exceeds the budget {budget}")]
    InfeasibleSearch { count: u128, budget: u128 },
    #[error("exhaustive search needs a finite field, got {0}")]
    NeedsFiniteField(crate::exact_linear::Field),
    #[error("{count} candidates exceed the budget {budget}")]
    BudgetExceeded { count: u128, budget: u128 },
}

impl Error {
    pub(crate) fn shape(msg: String) -> Self {
        Error::Shape(msg)
    }
}
