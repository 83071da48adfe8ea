//! Error type shared by every module in the crate.

use crate::scalar::Rat;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(
        "coefficient list and initial-term list have different lengths ({coeffs} vs {initials})"
    )]
    LengthMismatch { coeffs: usize, initials: usize },

    #[error("a recurrence needs at least one coefficient and one initial term")]
    EmptySpec,

    #[error("leading coefficient c_m must be nonzero")]
    ZeroLeadingCoefficient,

    #[error("invalid family parameters: {0}")]
    InvalidFamilyParams(String),

    #[error("index ({i}, {j}) outside 1..={n}")]
    IndexOutOfRange { i: usize, j: usize, n: usize },

    #[error("matrix order n = {n} must exceed the recurrence order m = {m}")]
    OrderTooSmall { n: usize, m: usize },

    #[error("alpha_1 = a_1 - a_(n+1) is zero; the reduction divides by it")]
    DegenerateAlpha1,

    #[error("alpha_1 and alpha_3 must both be nonzero here")]
    DegenerateAlpha,

    #[error("spectral precision must be at least 53 bits, got {0}")]
    PrecisionTooLow(u32),

    #[error("geometric ratio must be nonzero")]
    ZeroRatio,

    #[error("P*A*Q structure violated at ({i}, {j}): expected {expected}, found {found}")]
    StructureViolation {
        i: usize,
        j: usize,
        expected: Box<Rat>,
        found: Box<Rat>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
