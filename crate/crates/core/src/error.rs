use thiserror::Error;

use crate::rational::Rational;

/// Failure while reading the `r:d(,r:d)*` bundle grammar or a divisor range.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {input:?}: {reason}")]
pub struct ParseError {
    pub input: String,
    pub reason: String,
}

impl ParseError {
    pub fn new(input: impl Into<String>, reason: impl Into<String>) -> Self {
        ParseError {
            input: input.into(),
            reason: reason.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("a bundle needs at least one summand")]
    EmptyBundle,

    #[error("indecomposable summands need rank >= 1, got rank {0}")]
    ZeroRank(i64),

    #[error("rank {rank} is below the minimum {min} for this operation")]
    RankTooSmall { rank: i64, min: i64 },

    #[error("the coefficient a must be positive, got {0}")]
    NonPositiveA(i64),

    #[error("classes live in different rings: (r, d) = {left:?} vs {right:?}")]
    ContextMismatch { left: (i64, i64), right: (i64, i64) },

    #[error("{0} is not a rank-1 summand of the bundle")]
    NotALineSummand(String),

    #[error("sub-scroll classes are only available for rank 2 and 3, got rank {0}")]
    UnsupportedRank(i64),

    #[error("h0 is not determined by degree alone: a*mu_minus(E) + b = {0} is not positive")]
    H0Undefined(Rational),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    /// A rule affirmed and another refuted the same property. This means the
    /// rule catalog is wrong, so it is never reported as a verdict.
    #[error("rule contradiction: {affirm} says yes but {refute} says no")]
    Contradiction { affirm: String, refute: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
