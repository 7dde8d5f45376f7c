use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("base must be at least 2, got {0}")]
    InvalidBase(u32),

    #[error("digit {digit} is out of range for base {base}")]
    DigitOutOfRange { digit: u32, base: u32 },

    #[error("n must be positive")]
    ZeroInput,

    #[error("partition has weight {actual}, expected {expected}")]
    WeightMismatch { expected: u64, actual: u128 },

    #[error("expected {expected} entries, got {actual}")]
    WrongLength { expected: usize, actual: usize },

    #[error("beta_{index} = {value} exceeds its bound {bound}")]
    BetaOutOfBounds {
        index: usize,
        value: u64,
        bound: u128,
    },

    #[error("enumeration would exceed the budget of {budget} partitions")]
    EnumerationBudget { budget: u64 },

    #[error("nested summation needs {required} steps, budget is {budget}")]
    LoopBudget { budget: u64, required: String },

    #[error("empty range [{lo}, {hi}] has hi < lo - 1")]
    InvalidRange { lo: i64, hi: String },

    #[error("{0} is not available for this count")]
    Unsupported(&'static str),

    #[error("arithmetic overflow: {0}")]
    Overflow(&'static str),
}
