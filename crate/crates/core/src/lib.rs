//! Exact determinants of circulant matrices generated by linear recurrences.
//!
//! The crate builds circulants `circ(a_1, ..., a_n)` whose first row comes
//! from an order-m linear homogeneous recurrence, and computes their
//! determinants along several independent routes:
//!
//! * a fraction-free elimination oracle ([`oracle::det_bareiss`]),
//! * a high-precision eigenvalue-product oracle ([`oracle::det_spectral`]),
//! * the general P/A/Q reduction formula ([`reduction::det_lemma`]),
//! * closed forms for the Fibonacci, Lucas, Jacobsthal, Jacobsthal-Lucas,
//!   tribonacci and geometric families ([`closed_forms`]).
//!
//! Every route is exact rational arithmetic except the spectral oracle,
//! which reports a rigorous dyadic approximation. [`verify::run_verify`]
//! cross-validates all of them deterministically.

pub mod circulant;
pub mod closed_forms;
pub mod compute;
pub mod error;
pub mod matrix;
pub mod oracle;
pub mod reduction;
pub mod scalar;
pub mod sequence;
pub mod verify;

pub use circulant::{wrapped_term, CirculantMatrix, WrappedIndex};
pub use closed_forms::{Eq2Variant, SecondOrderParams, TribonacciContext};
pub use error::{Error, Result};
pub use matrix::Mat;
pub use oracle::{
    crosscheck, crosscheck_value, det_bareiss, det_spectral, ClosedFormKind, DetReport, DetValue,
    Dyadic, DyadicComplex, Flag, Method, SpectralEstimate,
};
pub use reduction::{alpha, basis_sequences, det_lemma, AlphaVector, BasisSequence, TransformPair};
pub use scalar::Rat;
pub use sequence::{FamilyTag, RecurrenceSpec, SequenceWindow};
pub use verify::{run_verify, VerifyConfig, VerifyReport};
