use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} must be positive")]
    NonPositive { what: &'static str },

    #[error("{d} does not divide {n}")]
    NotDivisor { d: u64, n: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("value does not fit in the chosen integer type")]
    Overflow,

    #[error("generator image is not a permutation of 0..{size}")]
    NotPermutation { size: usize },

    /// The generator's order does not divide `n`, so `1 -> generator` is not a homomorphism.
    #[error("not a Z_{n} action: generator has order {order}")]
    NotCyclicAction { n: u64, order: u64 },

    #[error("group element {g} out of range for Z_{n}")]
    ElementOutOfRange { g: u64, n: u64 },

    #[error("action would have {size} elements, budget is {budget}")]
    BudgetExceeded { size: u128, budget: usize },

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    #[error("invalid coset representatives: {0}")]
    InvalidRepresentatives(String),

    #[error("malformed action table: {0}")]
    MalformedTable(String),

    /// A closed form disagreed with itself or with a counting identity it must satisfy.
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}
