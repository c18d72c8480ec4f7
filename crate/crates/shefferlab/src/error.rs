//! Crate-wide error type.
//!
//! Every fallible operation reports one of these variants; all of them are
//! programming-contract violations (bad preconditions), never runtime
//! surprises, so callers typically bubble them up unchanged.

/// Errors raised by series, umbral, family, and identity operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The truncation order of an input is too small for the request.
    #[error("truncation order exhausted: {0}")]
    TruncationExhausted(String),
    /// Series inversion needs a nonzero constant term.
    #[error("series is not invertible: zero constant term")]
    NotInvertible,
    /// A shifted division or transfer step saw the wrong valuation.
    #[error("valuation mismatch: {0}")]
    ValuationMismatch(String),
    /// Composition f(g) needs the inner series to have zero constant term.
    #[error("composition requires a delta inner series (nonzero constant term found)")]
    CompositionRequiresDelta,
    /// Reversion is defined only for delta series (valuation exactly 1).
    #[error("reversion requires a delta series: {0}")]
    ReversionRequiresDelta(String),
    /// exp/log/pow preconditions on the constant term.
    #[error("bad constant term: {0}")]
    BadConstantTerm(String),
    /// Dividing a polynomial by x needs a zero constant term.
    #[error("polynomial is not divisible by x: nonzero constant term")]
    NotDivisibleByX,
    /// Family parameters violate the family's constraints.
    #[error("bad family parameters: {0}")]
    BadFamilyParams(String),
    /// An identity instance violates its theorem's index constraints.
    #[error("bad identity instance: {0}")]
    BadInstance(String),
    /// Text that does not parse as a canonical rational.
    #[error("bad rational literal: {0:?}")]
    BadRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
