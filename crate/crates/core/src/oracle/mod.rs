//! Independent determinant oracles.
//!
//! Two routes that share no code with the reduction formulas they validate:
//!
//! * `det_bareiss` — fraction-free elimination over exact rationals. On
//!   integer input every intermediate entry is a minor of the input matrix,
//!   so the result (and all intermediates) stay integral.
//! * `det_spectral` — the eigenvalue product of a circulant,
//!   `det = prod_k sum_j a_{j+1} eps^{kj}` with `eps = exp(2*pi*i/n)`,
//!   evaluated directly in O(n^2) fixed-point operations at configurable
//!   precision.
//!
//! The spectral evaluator works at an internal scale of
//! `precision + 64 + (product magnitude bound)` bits, so the returned value
//! is accurate to about 2^-precision in absolute terms even when the true
//! determinant is zero; `crosscheck`'s max(1, |exact|) floor is therefore
//! meaningful for every input.

mod fx;
mod report;

pub use report::{ClosedFormKind, DetReport, DetValue, Flag, Method};

use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::circulant::CirculantMatrix;
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::scalar::Rat;

/// A dyadic rational `mant / 2^exp2`: the exact result of a fixed-point
/// computation. Converts losslessly to `Rat`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dyadic {
    mant: BigInt,
    exp2: u32,
}

impl Dyadic {
    pub fn new(mant: BigInt, exp2: u32) -> Self {
        Dyadic { mant, exp2 }
    }

    /// Round an exact rational to `exp2` fractional bits.
    pub fn from_rat(r: &Rat, exp2: u32) -> Self {
        Dyadic::new(fx::FxCtx::new(exp2).to_fixed(r), exp2)
    }

    /// Exact conversion.
    pub fn to_rat(&self) -> Rat {
        Rat::new(self.mant.clone(), BigInt::one() << self.exp2).expect("power of two")
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic::new(self.mant.abs(), self.exp2)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    /// Approximate value; saturates to +/- infinity far outside f64 range.
    pub fn to_f64(&self) -> f64 {
        if self.mant.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits() as i64;
        let drop = (bits - 512).max(0) as u64;
        let head = (&self.mant >> drop).to_f64().unwrap_or(f64::NAN);
        let exp = drop as i64 - self.exp2 as i64;
        if exp >= 0 {
            head * 2f64.powi(exp.min(i32::MAX as i64) as i32)
        } else {
            head * 2f64.powi(exp.max(i32::MIN as i64) as i32)
        }
    }

    /// Plain decimal rendering with exactly `frac_digits` fractional digits,
    /// rounded half away from zero. Never scientific notation.
    pub fn decimal(&self, frac_digits: usize) -> String {
        let scale = BigInt::from(10u32).pow(frac_digits as u32);
        let scaled = &self.mant * &scale;
        let half = BigInt::one() << (self.exp2.max(1) - 1);
        let magnitude = (scaled.magnitude().to_owned() + half.magnitude()) >> self.exp2;
        let magnitude = BigInt::from(magnitude);
        let (int_part, frac_part) = magnitude.div_rem(&scale);
        let sign = if self.mant.is_negative() && !magnitude.is_zero() {
            "-"
        } else {
            ""
        };
        if frac_digits == 0 {
            format!("{sign}{int_part}")
        } else {
            format!(
                "{sign}{int_part}.{frac:0>width$}",
                frac = frac_part,
                width = frac_digits
            )
        }
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.decimal(12))
    }
}

/// Complex value with dyadic components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyadicComplex {
    pub re: Dyadic,
    pub im: Dyadic,
}

/// Result of the eigenvalue-product evaluation.
#[derive(Clone, Debug)]
pub struct SpectralEstimate {
    /// The complex product of all eigenvalues.
    pub value: DyadicComplex,
    /// |Im(value)|. Reported, never silently dropped: for a real input matrix
    /// the true determinant is real and this residual is pure rounding.
    pub imag_residual: Dyadic,
    /// The eigenvalues lambda_0 .. lambda_{n-1}.
    pub eigenvalues: Vec<DyadicComplex>,
    /// Precision that was requested, in bits.
    pub precision: u32,
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// The input is copied; zero pivots are handled by row swaps and an exactly
/// zero determinant is returned when no pivot exists.
pub fn det_bareiss(mat: &Mat) -> Rat {
    assert!(mat.is_square(), "determinant of a non-square matrix");
    let n = mat.n_rows();
    if n == 0 {
        return Rat::one();
    }
    let mut w: Vec<Vec<Rat>> = (1..=n).map(|i| mat.row(i).to_vec()).collect();
    let mut negate = false;
    let mut prev = Rat::one();
    for k in 0..n {
        if w[k][k].is_zero() {
            match (k + 1..n).find(|&r| !w[r][k].is_zero()) {
                Some(r) => {
                    w.swap(k, r);
                    negate = !negate;
                }
                None => return Rat::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &w[i][j] * &w[k][k] - &w[i][k] * &w[k][j];
                w[i][j] = num / &prev;
            }
            w[i][k] = Rat::zero();
        }
        prev = w[k][k].clone();
    }
    let det = w[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `det_bareiss` wrapped in a timed report.
pub fn det_bareiss_report(mat: &Mat) -> DetReport {
    let start = Instant::now();
    let value = det_bareiss(mat);
    DetReport::exact(value, Method::Bareiss, start.elapsed())
}

/// Eigenvalue-product determinant at the requested precision (>= 53 bits).
pub fn det_spectral(m: &CirculantMatrix, precision: u32) -> Result<SpectralEstimate> {
    if precision < 53 {
        return Err(Error::PrecisionTooLow(precision));
    }
    let n = m.order();

    // Guard bits: enough to absorb the full product magnitude, so the final
    // absolute error is ~2^-precision regardless of eigenvalue spread.
    let mut row_abs = Rat::zero();
    for a in m.row() {
        row_abs += a.abs();
    }
    let per_eig_bits = (row_abs.numer().div_ceil(row_abs.denom()) + 1u32).bits() + 1;
    let product_bits = per_eig_bits
        .checked_mul(n as u64)
        .expect("magnitude bound overflow");
    assert!(
        product_bits < 16_000_000,
        "spectral magnitude bound out of supported range"
    );
    let shift = precision + 64 + product_bits as u32;

    let ctx = fx::FxCtx::new(shift);
    let roots = ctx.roots_of_unity(n);
    let a_fx: Vec<BigInt> = m.row().iter().map(|a| ctx.to_fixed(a)).collect();

    let mut eigenvalues = Vec::with_capacity(n);
    let mut det = ctx.cx_one();
    for k in 0..n {
        let mut re = BigInt::zero();
        let mut im = BigInt::zero();
        for (j, a) in a_fx.iter().enumerate() {
            let w = &roots[(k * j) % n];
            re += ctx.round_shift(a * &w.re);
            im += ctx.round_shift(a * &w.im);
        }
        let lambda = fx::Cx { re, im };
        det = ctx.cx_mul(&det, &lambda);
        eigenvalues.push(DyadicComplex {
            re: Dyadic::new(lambda.re, shift),
            im: Dyadic::new(lambda.im, shift),
        });
    }

    let value = DyadicComplex {
        re: Dyadic::new(det.re, shift),
        im: Dyadic::new(det.im, shift),
    };
    let imag_residual = value.im.abs();
    Ok(SpectralEstimate {
        value,
        imag_residual,
        eigenvalues,
        precision,
    })
}

/// `det_spectral` wrapped in a timed report carrying the float flag.
pub fn det_spectral_report(m: &CirculantMatrix, precision: u32) -> Result<DetReport> {
    let start = Instant::now();
    let est = det_spectral(m, precision)?;
    Ok(DetReport::new(
        DetValue::Approx(est.value),
        Method::Spectral,
        vec![Flag::FloatApproximation],
        start.elapsed(),
    ))
}

/// Outcome of comparing an exact value with a spectral estimate.
#[derive(Clone, Debug)]
pub struct Crosscheck {
    pub pass: bool,
    pub value_within: bool,
    pub imag_within: bool,
}

/// True iff |Re(approx) - exact| and the imaginary residual are both at most
/// `rel_tol * max(1, |exact|)`. Comparison is exact rational arithmetic.
pub fn crosscheck(exact: &Rat, approx: &SpectralEstimate, rel_tol: f64) -> Crosscheck {
    crosscheck_value(exact, &approx.value, rel_tol)
}

/// `crosscheck` on a bare complex value.
pub fn crosscheck_value(exact: &Rat, approx: &DyadicComplex, rel_tol: f64) -> Crosscheck {
    assert!(
        rel_tol.is_finite() && rel_tol > 0.0,
        "rel_tol must be positive and finite"
    );
    let tol = Rat::from_f64(rel_tol).expect("finite tolerance");
    let bound = tol * exact.abs().max(Rat::one());
    let diff = (approx.re.to_rat() - exact).abs();
    let value_within = diff <= bound;
    let imag_within = approx.im.abs().to_rat() <= bound;
    Crosscheck {
        pass: value_within && imag_within,
        value_within,
        imag_within,
    }
}
