use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("enumeration-infeasible: {0}")]
    EnumerationInfeasible(String),

    #[error("empty: {0}")]
    Empty(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("not a codeword: {0}")]
    NotInCode(String),

    #[error("non-squarefree: length {0} is even")]
    NonSquarefree(usize),

    #[error("polynomial {poly} does not divide X^{n} - 1")]
    NotADivisor { poly: String, n: usize },

    #[error("no-witness: {0}")]
    NoWitness(String),

    #[error("undecided: {0}")]
    Undecided(String),

    #[error("time budget exhausted after {0} search nodes")]
    Timeout(u64),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Short machine tag used in JSON records.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::LengthMismatch { .. } => "length-mismatch",
            Error::EnumerationInfeasible(_) => "enumeration-infeasible",
            Error::Empty(_) => "empty",
            Error::InvalidArgument(_) => "invalid-argument",
            Error::NotInCode(_) => "not-in-code",
            Error::NonSquarefree(_) => "non-squarefree",
            Error::NotADivisor { .. } => "not-a-divisor",
            Error::NoWitness(_) => "no-witness",
            Error::Undecided(_) => "undecided",
            Error::Timeout(_) => "undecided",
            Error::Parse(_) => "parse",
            Error::Internal(_) => "internal",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
