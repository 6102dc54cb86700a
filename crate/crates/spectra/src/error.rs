use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Factorization gave up before completing; never a wrong answer.
    #[error("factorization budget exceeded on {0}")]
    FactorBudgetExceeded(BigUint),

    #[error("{0} is not prime")]
    NotPrime(BigUint),

    #[error("base must satisfy |a| > 1, got {0}")]
    InvalidBase(i64),

    #[error("order is undefined: {0}")]
    OrderUndefined(String),

    #[error("r*_{{{index}}}({base}) is undefined")]
    StarUndefined { base: i64, index: u64 },

    #[error("inexact division: {denominator} does not divide {numerator}")]
    InexactDivision {
        numerator: BigUint,
        denominator: BigUint,
    },

    #[error("unsupported case: {0}")]
    UnsupportedCase(String),

    #[error("witness not absorbed: {0}")]
    WitnessNotAbsorbed(String),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("invalid group parameters: {0}")]
    InvalidGroup(String),

    #[error("oracle cap exceeded: {0}")]
    OracleCapExceeded(String),

    #[error("matrix group closure does not match the order formula: got {got}, expected {expected}")]
    OrderFormulaMismatch { got: u64, expected: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
