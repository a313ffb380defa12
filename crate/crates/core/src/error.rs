use alloc::string::String;
use core::fmt;

/// Errors raised by the algebraic engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    DivisionByZero,
    /// An element of the configured coefficient algebra has no inverse; the
    /// algebraic symbols do not generate a field.
    ZeroDivisor,
    UnknownSymbol(String),
    DuplicateSymbol(String),
    InvalidMinPoly { symbol: String, reason: &'static str },
    UnconfiguredLayer(String),
    InvalidBasis(&'static str),
    DimensionMismatch { expected: usize, found: usize },
    ConfigMismatch,
    NotPrimitive,
    NotUnimodular,
    ZeroVector,
    ZeroGenerator,
    NonClassicalMode,
    NotInvertible(&'static str),
    InvalidArgument(String),
    Overflow,
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::ZeroDivisor => write!(f, "coefficient algebra has zero divisors"),
            Error::UnknownSymbol(s) => write!(f, "unknown symbol `{s}`"),
            Error::DuplicateSymbol(s) => write!(f, "symbol `{s}` declared twice"),
            Error::InvalidMinPoly { symbol, reason } => {
                write!(f, "invalid minimal polynomial for `{symbol}`: {reason}")
            }
            Error::UnconfiguredLayer(s) => write!(f, "`{s}` is not a configured quadratic layer"),
            Error::InvalidBasis(why) => write!(f, "invalid lattice basis: {why}"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::ConfigMismatch => write!(f, "operands belong to different configurations"),
            Error::NotPrimitive => write!(f, "vector is not primitive"),
            Error::NotUnimodular => write!(f, "matrix is not unimodular"),
            Error::ZeroVector => write!(f, "zero vector not allowed"),
            Error::ZeroGenerator => write!(f, "generator must be nonzero"),
            Error::NonClassicalMode => write!(f, "operation requires the classical (q = 1) mode"),
            Error::NotInvertible(what) => write!(f, "{what} is not invertible"),
            Error::InvalidArgument(s) => write!(f, "invalid argument: {s}"),
            Error::Overflow => write!(f, "integer overflow"),
        }
    }
}
