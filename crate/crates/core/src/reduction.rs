//! The P/A/Q reduction and the general determinant formula.
//!
//! For a circulant A built from an order-m recurrence, two order-n transforms
//! P and Q (each of determinant (-1)^(n(n+1)/2 - 1)) compress P*A*Q into a
//! small bordered block plus banded constants alpha_1..alpha_m. Expanding
//! that structure yields the reduction formula implemented by `det_lemma`:
//!
//! ```text
//! det(A) = alpha_1^(n-m) * sum over k_1..k_{m-1} in 2..=n of
//!          det[ a | column(k_1) | ... | column(k_{m-1}) ]
//!          * prod_i b^(i)_{n-k_i+1}
//! ```
//!
//! where column(k) = (a_(k), a_(k+1), ..., a_(k+m-1)) under the wrap rule and
//! the b-sequences are driven by the ratios -alpha_t/alpha_1 with
//! Kronecker-delta initial conditions.

use std::time::Instant;

use crate::circulant::{wrapped_term, CirculantMatrix};
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::oracle::{det_bareiss, DetReport, Method};
use crate::scalar::Rat;
use crate::sequence::RecurrenceSpec;

/// The m alpha values of a (spec, n) pair. alpha_1 = a_1 - a_{n+1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaVector {
    values: Vec<Rat>,
    n: usize,
}

impl AlphaVector {
    /// Construct directly from values (mainly for identity checks on
    /// arbitrary third-order alphas). `values[0]` is alpha_1.
    pub fn from_values(values: Vec<Rat>, n: usize) -> Self {
        assert!(!values.is_empty());
        AlphaVector { values, n }
    }

    pub fn m(&self) -> usize {
        self.values.len()
    }

    /// The matrix order this vector was computed for.
    pub fn n(&self) -> usize {
        self.n
    }

    /// alpha_t, 1-based.
    pub fn get(&self, t: usize) -> &Rat {
        assert!((1..=self.m()).contains(&t), "alpha index {t}");
        &self.values[t - 1]
    }

    pub fn alpha1(&self) -> &Rat {
        &self.values[0]
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }
}

/// alpha_t = A_{n-m+1, n-m+t} - sum_{i=1}^{m-1} c_i A_{n-m+1+i, n-m+t}
///           - c_m A_{1, n-m+t}, evaluated through the wrap rule.
pub fn alpha(spec: &RecurrenceSpec, n: usize) -> Result<AlphaVector> {
    let m = spec.order();
    if n <= m {
        return Err(Error::OrderTooSmall { n, m });
    }
    let a = CirculantMatrix::from_spec(spec, n)?;
    let mut values = Vec::with_capacity(m);
    for t in 1..=m {
        let col = n - m + t;
        let mut v = a.entry(n - m + 1, col)?.clone();
        for i in 1..m {
            v -= spec.coeff(i) * a.entry(n - m + 1 + i, col)?;
        }
        v -= spec.coeff(m) * a.entry(1, col)?;
        values.push(v);
    }
    Ok(AlphaVector { values, n })
}

/// One auxiliary sequence b^(r): Kronecker-delta initials, then
/// b_s = -(alpha_2/alpha_1) b_{s-1} - ... - (alpha_m/alpha_1) b_{s-m+1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisSequence {
    r: usize,
    terms: Vec<Rat>,
}

impl BasisSequence {
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// b_s, 1-based.
    pub fn term(&self, s: usize) -> &Rat {
        assert!((1..=self.terms.len()).contains(&s), "basis index {s}");
        &self.terms[s - 1]
    }

    pub fn terms(&self) -> &[Rat] {
        &self.terms
    }
}

/// The m-1 basis sequences b^(1)..b^(m-1), each with `len` terms.
///
/// Returns an empty list for m = 1 (the reduction formula has no inner sum
/// there). Requires alpha_1 != 0 otherwise, since the recurrence divides by it.
pub fn basis_sequences(alpha: &AlphaVector, len: usize) -> Result<Vec<BasisSequence>> {
    let m = alpha.m();
    if m == 1 {
        return Ok(Vec::new());
    }
    if alpha.alpha1().is_zero() {
        return Err(Error::DegenerateAlpha1);
    }
    assert!(len >= m - 1, "need at least the m-1 initial terms");
    let ratios: Vec<Rat> = (2..=m).map(|t| -(alpha.get(t) / alpha.alpha1())).collect();
    let mut out = Vec::with_capacity(m - 1);
    for r in 1..m {
        let mut terms: Vec<Rat> = (1..m)
            .map(|i| if i == r { Rat::one() } else { Rat::zero() })
            .collect();
        while terms.len() < len {
            let s = terms.len() + 1; // computing b_s for s >= m
            let mut v = Rat::zero();
            for (idx, ratio) in ratios.iter().enumerate() {
                let contrib = ratio * &terms[s - 2 - idx];
                if !contrib.is_zero() {
                    v += contrib;
                }
            }
            terms.push(v);
        }
        terms.truncate(len);
        out.push(BasisSequence { r, terms });
    }
    Ok(out)
}

/// Cell-by-cell builder that asserts no two construction rules collide.
struct DisjointCells {
    n: usize,
    cells: Vec<Option<Rat>>,
}

impl DisjointCells {
    fn new(n: usize) -> Self {
        DisjointCells {
            n,
            cells: vec![None; n * n],
        }
    }

    fn put(&mut self, i: usize, j: usize, v: Rat) {
        let slot = &mut self.cells[(i - 1) * self.n + (j - 1)];
        assert!(slot.is_none(), "construction rules overlap at ({i}, {j})");
        *slot = Some(v);
    }

    fn finish(self) -> Mat {
        let n = self.n;
        let mut m = Mat::zeros(n, n);
        for (idx, cell) in self.cells.into_iter().enumerate() {
            if let Some(v) = cell {
                m.set(idx / n + 1, idx % n + 1, v);
            }
        }
        m
    }
}

/// The left transform P: ones at (1,1) and on the anti-diagonal i+j = n+2,
/// -c_m at (m+1, 1), and -c_t wherever i+j-t = n+2 with i >= m+1.
pub fn build_p(spec: &RecurrenceSpec, n: usize) -> Result<Mat> {
    let m = spec.order();
    if n <= m {
        return Err(Error::OrderTooSmall { n, m });
    }
    let mut cells = DisjointCells::new(n);
    cells.put(1, 1, Rat::one());
    for i in 2..=n {
        cells.put(i, n + 2 - i, Rat::one());
    }
    cells.put(m + 1, 1, -spec.coeff(m));
    for i in m + 1..=n {
        for t in 1..=m {
            let j = n + 2 + t - i; // i + j - t = n + 2
            if j <= n {
                cells.put(i, j, -spec.coeff(t));
            }
        }
    }
    Ok(cells.finish())
}

/// The right transform Q: ones at (1,1) and on the anti-diagonal, and
/// b^(j-1)_{n-i+1} for 2 <= i <= n-m+1, 2 <= j <= m.
pub fn build_q(alpha: &AlphaVector, n: usize) -> Result<Mat> {
    let m = alpha.m();
    assert_eq!(alpha.n(), n, "alpha vector computed for a different order");
    if n <= m {
        return Err(Error::OrderTooSmall { n, m });
    }
    let bases = basis_sequences(alpha, n - 1)?;
    let mut cells = DisjointCells::new(n);
    cells.put(1, 1, Rat::one());
    for i in 2..=n {
        cells.put(i, n + 2 - i, Rat::one());
    }
    for i in 2..=n - m + 1 {
        for j in 2..=m {
            cells.put(i, j, bases[j - 2].term(n - i + 1).clone());
        }
    }
    Ok(cells.finish())
}

/// Both transforms of a (spec, n) pair.
#[derive(Clone, Debug)]
pub struct TransformPair {
    pub p: Mat,
    pub q: Mat,
}

pub fn transform_pair(spec: &RecurrenceSpec, n: usize) -> Result<TransformPair> {
    let al = alpha(spec, n)?;
    Ok(TransformPair {
        p: build_p(spec, n)?,
        q: build_q(&al, n)?,
    })
}

/// (-1)^(n(n+1)/2 - 1): the shared determinant of P and Q.
pub fn transform_sign(n: usize) -> Rat {
    if (n * (n + 1) / 2 - 1).is_multiple_of(2) {
        Rat::one()
    } else {
        Rat::int(-1)
    }
}

/// Outcome of a successful structure verification.
#[derive(Clone, Debug)]
pub struct PaqReport {
    pub n: usize,
    pub m: usize,
    /// Cells of the i, j > m block that were compared against the bands.
    pub band_cells_checked: usize,
    /// det(P*A*Q) = det(A), returned for reuse.
    pub det: Rat,
}

/// Multiply out P*A*Q exactly and check the claimed shape:
/// (a) in the block i, j > m the entry is alpha_k on the band i-j = k-1
///     (1 <= k <= m) and zero elsewhere,
/// (b) rows 2..=m of column 1 equal A_{n-i+2,1},
/// (c) entry (1,1) is a_1,
/// (d) det(P*A*Q) equals the elimination oracle's det(A)
///     (det P * det Q = +1).
///
/// The first failed comparison is reported as a `StructureViolation`; the
/// determinant mismatch case uses cell (0, 0).
pub fn verify_paq_structure(mat: &CirculantMatrix, spec: &RecurrenceSpec) -> Result<PaqReport> {
    let n = mat.order();
    let m = spec.order();
    if n <= m {
        return Err(Error::OrderTooSmall { n, m });
    }
    let al = alpha(spec, n)?;
    if m >= 2 && al.alpha1().is_zero() {
        return Err(Error::DegenerateAlpha1);
    }
    let p = build_p(spec, n)?;
    let q = build_q(&al, n)?;
    let a = mat.materialize();
    let paq = p.mul(&a).mul(&q);

    let check = |i: usize, j: usize, expected: Rat| -> Result<()> {
        let found = paq.at(i, j);
        if found != &expected {
            return Err(Error::StructureViolation {
                i,
                j,
                expected: Box::new(expected),
                found: Box::new(found.clone()),
            });
        }
        Ok(())
    };

    check(1, 1, mat.row()[0].clone())?;
    for i in 2..=m {
        check(i, 1, mat.entry(n - i + 2, 1)?.clone())?;
    }
    let mut band_cells_checked = 0;
    for i in m + 1..=n {
        for j in m + 1..=n {
            let expected = if i >= j && i - j < m {
                al.get(i - j + 1).clone()
            } else {
                Rat::zero()
            };
            check(i, j, expected)?;
            band_cells_checked += 1;
        }
    }

    let det_a = det_bareiss(&a);
    let det_paq = det_bareiss(&paq);
    if det_paq != det_a {
        return Err(Error::StructureViolation {
            i: 0,
            j: 0,
            expected: Box::new(det_a),
            found: Box::new(det_paq),
        });
    }

    Ok(PaqReport {
        n,
        m,
        band_cells_checked,
        det: det_a,
    })
}

/// Advance a multi-index with digits in 2..=n; false when exhausted.
fn advance(ks: &mut [usize], n: usize) -> bool {
    for d in ks.iter_mut() {
        if *d < n {
            *d += 1;
            return true;
        }
        *d = 2;
    }
    false
}

/// The general reduction formula.
///
/// Cost is (n-1)^(m-1) inner m x m eliminations; this is a correctness
/// artifact, not a fast path. Requires n > m, and alpha_1 != 0 whenever
/// m >= 2 (callers are expected to fall back to `det_bareiss` and flag
/// `Alpha1ZeroFallback` on `DegenerateAlpha1`). For m = 1 the empty
/// sum/product convention gives a_1 * alpha_1^(n-1).
pub fn det_lemma(spec: &RecurrenceSpec, n: usize) -> Result<DetReport> {
    let start = Instant::now();
    let m = spec.order();
    if n <= m {
        return Err(Error::OrderTooSmall { n, m });
    }
    let al = alpha(spec, n)?;
    if m >= 2 && al.alpha1().is_zero() {
        return Err(Error::DegenerateAlpha1);
    }

    let total = if m == 1 {
        spec.initials()[0].clone()
    } else {
        let window = spec.generate(n);
        let row = window.terms();
        let bases = basis_sequences(&al, n - 1)?;
        let mut sum = Rat::zero();
        let mut ks = vec![2usize; m - 1];
        loop {
            // Repeated indices give equal columns, hence zero minors.
            let has_duplicate = (1..ks.len()).any(|i| ks[i..].contains(&ks[i - 1]));
            if !has_duplicate {
                let mut weight = Rat::one();
                for (i, &k) in ks.iter().enumerate() {
                    weight *= bases[i].term(n - k + 1);
                }
                if !weight.is_zero() {
                    let mut d = Mat::zeros(m, m);
                    for r in 1..=m {
                        d.set(r, 1, spec.initials()[r - 1].clone());
                        for (c, &k) in ks.iter().enumerate() {
                            d.set(r, c + 2, wrapped_term(row, (k + r - 1) as i64).clone());
                        }
                    }
                    let minor = det_bareiss(&d);
                    if !minor.is_zero() {
                        sum += minor * weight;
                    }
                }
            }
            if !advance(&mut ks, n) {
                break;
            }
        }
        sum
    };

    let det = al.alpha1().pow((n - m) as i64) * total;
    Ok(DetReport::exact(det, Method::Lemma, start.elapsed()))
}
