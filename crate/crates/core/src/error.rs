use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The exact result does not fit the active arithmetic lane.
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("domain error: {0}")]
    Domain(#[from] Violation),
    /// Two searches that must agree produced different witnesses.
    #[error("inconsistent search results: {0}")]
    Inconsistent(String),
    #[error("worker pool: {0}")]
    Pool(String),
    #[error("malformed record: {0}")]
    Parse(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

/// A violated precondition, named precisely enough to act on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,
    #[error("{0} must be positive")]
    NonPositive(&'static str),
    #[error("{0} must be coprime")]
    NotCoprime(&'static str),
    #[error("product {0} is not a perfect square")]
    ProductNotSquare(u128),
    #[error("{larger} must be greater than {smaller}")]
    NotGreater {
        larger: &'static str,
        smaller: &'static str,
    },
    #[error("{0} must have opposite parity")]
    SameParity(&'static str),
    #[error("{0} must be odd")]
    NotOdd(&'static str),
    #[error("{divisor} must divide {dividend}")]
    NotDivisor {
        divisor: &'static str,
        dividend: &'static str,
    },
    #[error("{equation} does not hold for {values:?}")]
    EquationFails {
        equation: &'static str,
        values: Vec<u64>,
    },
    #[error("arithmetic width must be between 8 and 64 bits, got {0}")]
    InvalidWidth(u32),
    #[error("{0}")]
    Unsupported(String),
}
