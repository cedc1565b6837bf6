use alloc::string::String;
use core::fmt;

/// Errors raised by the algebraic and coding-theoretic layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    NotPrime(u32),
    ZeroExtensionDegree,
    FieldTooLarge { p: u32, k: u32 },
    DivisionByZero,
    ForeignElement(u32),
    DimensionMismatch { expected: usize, found: usize },
    ZeroPolynomial,
    NotHomogeneous,
    EmptyInput(&'static str),
    /// A precondition on the arguments of an operation does not hold.
    Precondition(String),
    /// A Gröbner basis or vanishing ideal failed its self-check.
    Validation(String),
    /// Krull dimension of the quotient exceeds what the degree routine supports.
    DimensionTooLarge(usize),
    /// Points of a family violate one of the nested-cartesian conditions.
    NestedCondition { condition: u8, detail: String },
    BudgetExceeded { needed: u128, budget: u128 },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::ZeroExtensionDegree => write!(f, "extension degree must be at least 1"),
            Error::FieldTooLarge { p, k } => {
                write!(f, "field of size {p}^{k} exceeds the supported size 2^16")
            }
            Error::DivisionByZero => write!(f, "inversion of zero"),
            Error::ForeignElement(x) => write!(f, "element index {x} does not belong to this field"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::ZeroPolynomial => write!(f, "zero polynomial not allowed here"),
            Error::NotHomogeneous => write!(f, "polynomial is not homogeneous"),
            Error::EmptyInput(what) => write!(f, "empty {what}"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::Validation(msg) => write!(f, "validation failed: {msg}"),
            Error::DimensionTooLarge(dim) => {
                write!(f, "quotient has Krull dimension {dim}; at most 1 is supported")
            }
            Error::NestedCondition { condition, detail } => {
                let tag = match condition {
                    1 => "(i)",
                    2 => "(ii)",
                    _ => "(iii)",
                };
                write!(f, "nested cartesian condition {tag} violated: {detail}")
            }
            Error::BudgetExceeded { needed, budget } => {
                write!(f, "enumeration needs {needed} steps, budget is {budget}")
            }
        }
    }
}

impl core::error::Error for Error {}
