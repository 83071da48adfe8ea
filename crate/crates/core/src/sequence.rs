//! Linear homogeneous recurrences of order m and the built-in families.
//!
//! A `RecurrenceSpec` holds the coefficients c_1..c_m and the initial terms
//! a_1..a_m of
//!
//! ```text
//! a_k = c_1 a_{k-1} + c_2 a_{k-2} + ... + c_m a_{k-m}    (k > m, c_m != 0)
//! ```
//!
//! and `generate` evaluates exact term windows a_1..a_L. All term indexing in
//! this crate is 1-based.

use crate::error::{Error, Result};
use crate::scalar::Rat;

/// Validated recurrence: order `m`, coefficients `c_1..c_m`, initials `a_1..a_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceSpec {
    coeffs: Vec<Rat>,
    initials: Vec<Rat>,
}

impl RecurrenceSpec {
    /// Build and validate a recurrence from coefficient and initial-term lists.
    pub fn new(coeffs: Vec<Rat>, initials: Vec<Rat>) -> Result<Self> {
        if coeffs.len() != initials.len() {
            return Err(Error::LengthMismatch {
                coeffs: coeffs.len(),
                initials: initials.len(),
            });
        }
        if coeffs.is_empty() {
            return Err(Error::EmptySpec);
        }
        if coeffs.last().expect("nonempty").is_zero() {
            return Err(Error::ZeroLeadingCoefficient);
        }
        Ok(RecurrenceSpec { coeffs, initials })
    }

    /// Convenience constructor from small integers.
    pub fn from_ints(coeffs: &[i64], initials: &[i64]) -> Result<Self> {
        RecurrenceSpec::new(
            coeffs.iter().copied().map(Rat::int).collect(),
            initials.iter().copied().map(Rat::int).collect(),
        )
    }

    pub fn from_family(tag: &FamilyTag) -> Result<Self> {
        tag.spec()
    }

    /// The order m.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficients c_1..c_m (slice index 0 holds c_1).
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Initial terms a_1..a_m (slice index 0 holds a_1).
    pub fn initials(&self) -> &[Rat] {
        &self.initials
    }

    /// Coefficient c_t, 1-based.
    pub fn coeff(&self, t: usize) -> &Rat {
        assert!((1..=self.order()).contains(&t), "coefficient index {t}");
        &self.coeffs[t - 1]
    }

    /// Exact terms a_1..a_count. A count of at most m returns a prefix of the
    /// initial terms.
    pub fn generate(&self, count: usize) -> SequenceWindow {
        let m = self.order();
        let mut terms: Vec<Rat> = Vec::with_capacity(count);
        terms.extend_from_slice(&self.initials[..count.min(m)]);
        while terms.len() < count {
            let k = terms.len(); // about to fill terms[k] = a_{k+1}
            let mut next = Rat::zero();
            for (i, c) in self.coeffs.iter().enumerate() {
                // c_{i+1} * a_{k - i}  (term index k+1 minus i+1)
                let term = c * &terms[k - 1 - i];
                if !term.is_zero() {
                    next += term;
                }
            }
            terms.push(next);
        }
        SequenceWindow {
            terms,
            source: self.clone(),
        }
    }
}

/// An exact window a_1..a_L of a recurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceWindow {
    terms: Vec<Rat>,
    source: RecurrenceSpec,
}

impl SequenceWindow {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Term a_k, 1-based. Panics outside 1..=len.
    pub fn term(&self, k: usize) -> &Rat {
        assert!(
            (1..=self.terms.len()).contains(&k),
            "term index {k} outside 1..={}",
            self.terms.len()
        );
        &self.terms[k - 1]
    }

    /// All terms as a slice; slice index 0 holds a_1.
    pub fn terms(&self) -> &[Rat] {
        &self.terms
    }

    pub fn source(&self) -> &RecurrenceSpec {
        &self.source
    }
}

/// The named sequence families.
///
/// The second-order families are the (p, q, a, b) instances of
/// U_n = p U_{n-1} + q U_{n-2}, U_1 = a, U_2 = b:
/// Fibonacci (1,1,1,1), Lucas (1,1,1,3), Jacobsthal (1,2,1,1),
/// Jacobsthal-Lucas (1,2,1,3).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyTag {
    Fibonacci,
    Lucas,
    Jacobsthal,
    JacobsthalLucas,
    /// a_k = a_{k-1} + a_{k-2} + a_{k-3} with initials 1, 1, 2.
    Tribonacci,
    /// First row a, a^2, ..., a^n: order-1 recurrence with c_1 = a_1 = ratio.
    Geometric(Rat),
    /// Arbitrary (p, q, a, b) second-order instance, q != 0.
    SecondOrder {
        p: Rat,
        q: Rat,
        a: Rat,
        b: Rat,
    },
}

impl FamilyTag {
    /// The recurrence for this family.
    pub fn spec(&self) -> Result<RecurrenceSpec> {
        let ints = |c: &[i64], a: &[i64]| RecurrenceSpec::from_ints(c, a);
        match self {
            FamilyTag::Fibonacci => ints(&[1, 1], &[1, 1]),
            FamilyTag::Lucas => ints(&[1, 1], &[1, 3]),
            FamilyTag::Jacobsthal => ints(&[1, 2], &[1, 1]),
            FamilyTag::JacobsthalLucas => ints(&[1, 2], &[1, 3]),
            FamilyTag::Tribonacci => ints(&[1, 1, 1], &[1, 1, 2]),
            FamilyTag::Geometric(r) => {
                if r.is_zero() {
                    return Err(Error::InvalidFamilyParams("geometric ratio is zero".into()));
                }
                RecurrenceSpec::new(vec![r.clone()], vec![r.clone()])
            }
            FamilyTag::SecondOrder { p, q, a, b } => {
                if q.is_zero() {
                    return Err(Error::InvalidFamilyParams(
                        "second-order q is zero (c_m would vanish)".into(),
                    ));
                }
                RecurrenceSpec::new(vec![p.clone(), q.clone()], vec![a.clone(), b.clone()])
            }
        }
    }

    /// Stable lowercase name used by the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            FamilyTag::Fibonacci => "fibonacci",
            FamilyTag::Lucas => "lucas",
            FamilyTag::Jacobsthal => "jacobsthal",
            FamilyTag::JacobsthalLucas => "jacobsthal-lucas",
            FamilyTag::Tribonacci => "tribonacci",
            FamilyTag::Geometric(_) => "geometric",
            FamilyTag::SecondOrder { .. } => "second-order",
        }
    }
}
