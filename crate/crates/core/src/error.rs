use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Binary operation on series truncated at different orders.
    OrderMismatch { left: usize, right: usize },
    /// Binary operation on Dirichlet series with different limits.
    LimitMismatch { left: usize, right: usize },
    /// `1 - q^0 = 0` has no inverse.
    ZeroExponent,
    /// Series inversion needs a constant term of `1` or `-1`.
    NonUnitConstantTerm,
    /// Coefficient requested beyond what the truncation carries.
    IndexOutOfRange { index: usize, order: usize },
    /// Stripping needs a constant term of exactly `1`.
    ConstantTermNotOne,
    /// The series is already `1` up to its order; there is nothing left to strip.
    NothingToStrip,
    /// A series needs at least one coefficient.
    EmptyCoefficients,
    /// An argument outside its documented domain.
    InvalidArgument(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OrderMismatch { left, right } => {
                write!(f, "truncation order mismatch: {left} vs {right}")
            }
            Error::LimitMismatch { left, right } => {
                write!(f, "dirichlet series limit mismatch: {left} vs {right}")
            }
            Error::ZeroExponent => f.write_str("factor 1 - q^0 is zero and cannot be inverted"),
            Error::NonUnitConstantTerm => f.write_str("non-unit constant term"),
            Error::IndexOutOfRange { index, order } => {
                write!(f, "index {index} is beyond truncation order {order}")
            }
            Error::ConstantTermNotOne => f.write_str("constant term is not 1"),
            Error::NothingToStrip => f.write_str("series is already 1; nothing to strip"),
            Error::EmptyCoefficients => f.write_str("coefficient list is empty"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
