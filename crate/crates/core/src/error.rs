//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

/// Errors produced by validation, hypothesis checks, and resource bounds.
///
/// [`Error::BoundExceeded`] is the only resource refusal; everything else is
/// a validation or hypothesis failure. The distinction matters to callers
/// that map errors onto exit codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Objects built over symmetric groups of different degrees were mixed.
    DegreeMismatch { expected: usize, found: usize },
    /// Malformed textual input (cycle notation, group or graph files).
    Parse(String),
    /// A point outside `1..=degree` appeared in cycle notation or an edge.
    PointOutOfRange { point: usize, degree: usize },
    /// A point appeared twice in cycle notation.
    RepeatedPoint { point: usize },
    /// A projected enumeration size exceeds the configured limit.
    /// Refusal, never truncation: no partial answer is produced.
    BoundExceeded {
        what: &'static str,
        size: u128,
        limit: usize,
    },
    /// The element set handed to a group constructor is not closed.
    NotAGroup,
    /// A cyclotomic value does not lie in the rationals.
    NotRational,
    /// `R` is not a subgroup of `W`.
    NotSubgroup,
    /// `R` is not normal in `W`.
    NotNormal,
    /// `W/R` is not cyclic.
    QuotientNotCyclic,
    /// `|W/R|` and `|R|` are not coprime.
    OrdersNotCoprime { quotient: usize, kernel: usize },
    /// A cyclic-character constructor was applied to a non-cyclic group.
    NotCyclic,
    /// A dihedral-character constructor was applied to a group that is not
    /// dihedral of order `2b` with `b` odd.
    NotDihedralOdd,
    /// `Cyclic(a)` requires `a` to divide the group order.
    InvalidDivisor { divisor: usize, order: usize },
    /// The character was constructed over a different group.
    CharacterGroupMismatch,
    /// A value table failed the full multiplicativity check.
    NotMultiplicative,
    /// A closed-form hypothesis failed; the message names the witness.
    HypothesisViolated(String),
    /// A count that must be a non-negative integer is not.
    NonIntegerCount(String),
    /// Two independent code paths disagree. Internal failure.
    PathsDisagree(String),
}

impl Error {
    /// True for resource refusals (as opposed to validation failures).
    pub fn is_resource_bound(&self) -> bool {
        matches!(self, Error::BoundExceeded { .. })
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegreeMismatch { expected, found } => {
                write!(f, "degree mismatch: expected {expected}, found {found}")
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::PointOutOfRange { point, degree } => {
                write!(f, "point {point} out of range 1..={degree}")
            }
            Error::RepeatedPoint { point } => write!(f, "repeated point {point}"),
            Error::BoundExceeded { what, size, limit } => {
                write!(f, "{what} of size {size} exceeds the configured bound {limit}")
            }
            Error::NotAGroup => write!(f, "element set is not closed under composition"),
            Error::NotRational => write!(f, "value does not lie in the rationals"),
            Error::NotSubgroup => write!(f, "R is not a subgroup of W"),
            Error::NotNormal => write!(f, "R is not normal in W"),
            Error::QuotientNotCyclic => write!(f, "the quotient W/R is not cyclic"),
            Error::OrdersNotCoprime { quotient, kernel } => {
                write!(f, "|W/R| = {quotient} and |R| = {kernel} are not coprime")
            }
            Error::NotCyclic => write!(f, "group is not cyclic"),
            Error::NotDihedralOdd => {
                write!(f, "group is not dihedral of order 2b with b odd")
            }
            Error::InvalidDivisor { divisor, order } => {
                write!(f, "{divisor} does not divide the group order {order}")
            }
            Error::CharacterGroupMismatch => {
                write!(f, "character was constructed over a different group")
            }
            Error::NotMultiplicative => {
                write!(f, "value table is not multiplicative")
            }
            Error::HypothesisViolated(msg) => write!(f, "hypothesis violated: {msg}"),
            Error::NonIntegerCount(msg) => {
                write!(f, "count is not a non-negative integer: {msg}")
            }
            Error::PathsDisagree(msg) => {
                write!(f, "internal failure: independent code paths disagree: {msg}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
