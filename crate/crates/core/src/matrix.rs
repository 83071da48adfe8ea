//! Dense matrices of exact rationals.
//!
//! Indices on the public surface are 1-based, matching the conventions used
//! throughout this crate (row/column formulas are transcribed literally from
//! the reduction definitions, which are all stated 1-based). Storage is a
//! flat row-major vector internally.

use crate::scalar::Rat;

/// Dense matrix of `Rat` entries with 1-based `at`/`set` accessors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 1..=n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Build from row vectors. Panics when rows are ragged or empty.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        assert!(!rows.is_empty(), "Mat::from_rows: no rows");
        let cols = rows[0].len();
        assert!(cols > 0, "Mat::from_rows: empty rows");
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "Mat::from_rows: ragged rows"
        );
        let n_rows = rows.len();
        let data = rows.into_iter().flatten().collect();
        Mat {
            rows: n_rows,
            cols,
            data,
        }
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    fn idx(&self, i: usize, j: usize) -> usize {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "Mat index ({i}, {j}) outside {}x{}",
            self.rows,
            self.cols
        );
        (i - 1) * self.cols + (j - 1)
    }

    /// Entry at row `i`, column `j` (both 1-based).
    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[self.idx(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        let k = self.idx(i, j);
        self.data[k] = v;
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        assert!((1..=self.rows).contains(&a) && (1..=self.rows).contains(&b));
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data
                .swap((a - 1) * self.cols + j, (b - 1) * self.cols + j);
        }
    }

    /// Row `i` as a slice (1-based).
    pub fn row(&self, i: usize) -> &[Rat] {
        assert!((1..=self.rows).contains(&i));
        &self.data[(i - 1) * self.cols..i * self.cols]
    }

    pub fn trace(&self) -> Rat {
        assert!(self.is_square(), "trace of a non-square matrix");
        (1..=self.rows).map(|i| self.at(i, i).clone()).sum()
    }

    /// Exact matrix product.
    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in Mat::mul");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 1..=self.rows {
            for j in 1..=other.cols {
                let mut acc = Rat::zero();
                for k in 1..=self.cols {
                    let term = self.at(i, k) * other.at(k, j);
                    if !term.is_zero() {
                        acc += term;
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64) -> Rat {
        Rat::int(v)
    }

    #[test]
    fn identity_and_trace() {
        let id = Mat::identity(3);
        assert_eq!(id.at(2, 2), &r(1));
        assert_eq!(id.at(1, 3), &r(0));
        assert_eq!(id.trace(), r(3));
    }

    #[test]
    fn product_against_hand_result() {
        let a = Mat::from_rows(vec![vec![r(1), r(2)], vec![r(3), r(4)]]);
        let b = Mat::from_rows(vec![vec![r(0), r(1)], vec![r(1), r(0)]]);
        let ab = a.mul(&b);
        assert_eq!(ab, Mat::from_rows(vec![vec![r(2), r(1)], vec![r(4), r(3)]]));
    }

    #[test]
    fn swap_rows_swaps() {
        let mut m = Mat::from_rows(vec![vec![r(1), r(2)], vec![r(3), r(4)]]);
        m.swap_rows(1, 2);
        assert_eq!(m.row(1), &[r(3), r(4)]);
        assert_eq!(m.row(2), &[r(1), r(2)]);
    }

    #[test]
    #[should_panic]
    fn out_of_range_panics() {
        let m = Mat::identity(2);
        let _ = m.at(0, 1);
    }
}
