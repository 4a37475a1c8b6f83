use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("ring has {0} variables, at most {max} are supported", max = crate::poly::MAX_VARS)]
    TooManyVariables(usize),

    #[error("duplicate or invalid variable name `{0}`")]
    BadVariable(String),

    #[error("operands live in different rings: [{left}] vs [{right}]")]
    ContextMismatch { left: String, right: String },

    #[error("grading error: {0}")]
    Grading(String),

    #[error("{divisor} does not divide term {term}")]
    Divisibility { divisor: String, term: String },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("chart transform failed: {0}")]
    Transform(String),

    #[error(
        "Groebner budget exceeded: {processed} S-pairs processed (limit {limit}), {basis_len} basis elements so far"
    )]
    Budget {
        processed: usize,
        limit: usize,
        basis_len: usize,
    },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("fixture error: {0}")]
    Fixture(String),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget { .. })
    }
}
