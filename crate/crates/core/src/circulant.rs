//! Circulant matrices and the wrap-around index rule.
//!
//! `circ(a_1, ..., a_n)` is the n x n matrix whose first row is the
//! generating vector and whose every following row is the previous one
//! rotated right by one. Entry (i, j) is `a_(j-i+1)` where the parenthesised
//! subscript wraps into 1..=n modulo n.

use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::scalar::Rat;
use crate::sequence::RecurrenceSpec;

/// An out-of-range 1-based index together with its wrapped resolution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WrappedIndex {
    raw: i64,
    resolved: usize,
}

impl WrappedIndex {
    /// Wrap an arbitrary integer index into 1..=n.
    pub fn new(raw: i64, n: usize) -> Self {
        assert!(n > 0, "wrap modulus must be positive");
        let resolved = (raw - 1).rem_euclid(n as i64) as usize + 1;
        WrappedIndex { raw, resolved }
    }

    pub fn raw(&self) -> i64 {
        self.raw
    }

    /// The equivalent index in 1..=n.
    pub fn resolved(&self) -> usize {
        self.resolved
    }
}

/// Term `a_(x)` of a 1-based row, total over all integers x.
pub fn wrapped_term(row: &[Rat], x: i64) -> &Rat {
    assert!(!row.is_empty(), "wrapped_term on an empty row");
    &row[WrappedIndex::new(x, row.len()).resolved() - 1]
}

/// Circulant matrix, stored as its generating first row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirculantMatrix {
    row: Vec<Rat>,
    source: Option<RecurrenceSpec>,
}

impl CirculantMatrix {
    /// Circulant from an explicit first row (must be nonempty).
    pub fn new(row: Vec<Rat>) -> Result<Self> {
        if row.is_empty() {
            return Err(Error::EmptySpec);
        }
        Ok(CirculantMatrix { row, source: None })
    }

    /// `circ(a_1, ..., a_n)` with the row generated by `spec`.
    pub fn from_spec(spec: &RecurrenceSpec, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptySpec);
        }
        Ok(CirculantMatrix {
            row: spec.generate(n).terms().to_vec(),
            source: Some(spec.clone()),
        })
    }

    pub fn from_ints(row: &[i64]) -> Result<Self> {
        CirculantMatrix::new(row.iter().copied().map(Rat::int).collect())
    }

    pub fn order(&self) -> usize {
        self.row.len()
    }

    /// The generating first row a_1..a_n.
    pub fn row(&self) -> &[Rat] {
        &self.row
    }

    pub fn source(&self) -> Option<&RecurrenceSpec> {
        self.source.as_ref()
    }

    /// Entry (i, j), 1-based: `a_{j-i+1}` when j >= i, else `a_{n+j-i+1}`.
    pub fn entry(&self, i: usize, j: usize) -> Result<&Rat> {
        let n = self.order();
        if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
            return Err(Error::IndexOutOfRange { i, j, n });
        }
        Ok(wrapped_term(&self.row, j as i64 - i as i64 + 1))
    }

    /// Dense form, for the elimination oracle and structure checks only.
    /// Formula paths never materialize.
    pub fn materialize(&self) -> Mat {
        let n = self.order();
        let mut m = Mat::zeros(n, n);
        for i in 1..=n {
            for j in 1..=n {
                m.set(i, j, self.entry(i, j).expect("in range").clone());
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::FamilyTag;

    fn r(v: i64) -> Rat {
        Rat::int(v)
    }

    #[test]
    fn from_spec_generates_first_rows() {
        let fib = FamilyTag::Fibonacci.spec().unwrap();
        let c = CirculantMatrix::from_spec(&fib, 4).unwrap();
        assert_eq!(c.row(), &[r(1), r(1), r(2), r(3)]);
        assert!(c.source().is_some());

        let tri = FamilyTag::Tribonacci.spec().unwrap();
        assert_eq!(
            CirculantMatrix::from_spec(&tri, 5).unwrap().row(),
            &[r(1), r(1), r(2), r(4), r(7)]
        );

        let geo = FamilyTag::Geometric(r(2)).spec().unwrap();
        assert_eq!(
            CirculantMatrix::from_spec(&geo, 3).unwrap().row(),
            &[r(2), r(4), r(8)]
        );
    }

    #[test]
    fn entry_wraps_below_the_diagonal() {
        let c = CirculantMatrix::from_ints(&[1, 1, 2, 3]).unwrap();
        assert_eq!(c.entry(2, 1).unwrap(), &r(3)); // a_{n+j-i+1} = a_4
        assert_eq!(c.entry(3, 3).unwrap(), &r(1)); // diagonal = a_1
        assert_eq!(c.entry(1, 4).unwrap(), &r(3)); // first row is the generator
        assert!(matches!(c.entry(0, 1), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(c.entry(1, 5), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn wrapped_term_is_total() {
        let row = [r(1), r(1), r(2), r(3)];
        assert_eq!(wrapped_term(&row, 5), &r(1));
        assert_eq!(wrapped_term(&row, 0), &r(3));
        assert_eq!(wrapped_term(&row, 3), &r(2));
        assert_eq!(wrapped_term(&row, -4), &r(3)); // -4 wraps to 4
        assert_eq!(WrappedIndex::new(-3, 4).resolved(), 1);
    }

    #[test]
    fn materialize_small_cases() {
        let c2 = CirculantMatrix::from_ints(&[1, 2]).unwrap();
        assert_eq!(
            c2.materialize(),
            Mat::from_rows(vec![vec![r(1), r(2)], vec![r(2), r(1)]])
        );

        let c4 = CirculantMatrix::from_ints(&[1, 1, 2, 3]).unwrap();
        assert_eq!(c4.materialize().row(2), &[r(3), r(1), r(1), r(2)]);

        let c1 = CirculantMatrix::from_ints(&[7]).unwrap();
        assert_eq!(c1.materialize(), Mat::from_rows(vec![vec![r(7)]]));
    }

    #[test]
    fn rows_rotate_right() {
        let c = CirculantMatrix::from_ints(&[1, 5, -2, 0, 9]).unwrap();
        let dense = c.materialize();
        for i in 1..c.order() {
            let prev = dense.row(i);
            let next = dense.row(i + 1);
            for j in 0..c.order() {
                assert_eq!(next[(j + 1) % c.order()], prev[j]);
            }
        }
    }

    #[test]
    fn trace_is_n_times_a1() {
        let c = CirculantMatrix::from_ints(&[4, 1, 2]).unwrap();
        assert_eq!(c.materialize().trace(), r(12));
    }
}
