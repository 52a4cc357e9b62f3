use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    DivisionByZero,
    /// A family parameter outside its supported range.
    InvalidParameter {
        family: &'static str,
        constraint: &'static str,
    },
    /// A combination of components the constructors do not support.
    Unsupported(String),
    Parse(String),
    /// A search or enumeration ran past its node budget.
    BudgetExceeded {
        what: &'static str,
        limit: u64,
    },
    DegreeMismatch {
        expected: usize,
        found: usize,
    },
    DuplicateSet(usize),
    IndexOutOfRange {
        index: usize,
        size: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::InvalidParameter { family, constraint } => {
                write!(f, "invalid parameter for {family}: requires {constraint}")
            }
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::BudgetExceeded { what, limit } => {
                write!(f, "{what} exceeded its budget of {limit} nodes")
            }
            Error::DegreeMismatch { expected, found } => {
                write!(
                    f,
                    "permutation degree mismatch: expected {expected}, found {found}"
                )
            }
            Error::DuplicateSet(i) => write!(f, "set #{i} duplicates an earlier set"),
            Error::IndexOutOfRange { index, size } => {
                write!(
                    f,
                    "index {index} out of range for ground set of size {size}"
                )
            }
        }
    }
}

impl core::error::Error for Error {}
