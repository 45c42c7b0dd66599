use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid weight for su({rank})_{level}: {reason}")]
    InvalidWeight {
        rank: usize,
        level: u32,
        reason: String,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{factor}: expected {expected}, found {found}")]
    FactorMismatch {
        factor: &'static str,
        expected: String,
        found: String,
    },

    #[error("index {index} out of range for S-matrix of dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("enumeration needs {estimated} candidate fields, budget is {budget}")]
    BudgetExceeded { estimated: u128, budget: u128 },

    #[error("field is not in exp (fails the selection rules): {0}")]
    NotInExp(String),

    #[error("spin correction nm(m+n)/2 is not integral for m={m}, n={n}")]
    HalfIntegerSpinTerm { m: u32, n: u32 },
}
