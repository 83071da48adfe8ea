//! Fixed-point big-integer kernel for the spectral oracle.
//!
//! Values are mantissas interpreted as `m / 2^shift` for one shared `shift`
//! per evaluation. The shift always carries enough guard bits (chosen by the
//! caller) that the accumulated rounding of the whole eigenvalue-product
//! pipeline stays far below the advertised precision.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::Rat;

/// Complex number as a mantissa pair at the context's scale.
#[derive(Clone, Debug)]
pub(crate) struct Cx {
    pub re: BigInt,
    pub im: BigInt,
}

pub(crate) struct FxCtx {
    pub shift: u32,
    half: BigInt,
}

impl FxCtx {
    pub fn new(shift: u32) -> Self {
        assert!(shift >= 2);
        FxCtx {
            shift,
            half: BigInt::one() << (shift - 1),
        }
    }

    pub fn one(&self) -> BigInt {
        BigInt::one() << self.shift
    }

    /// Round-to-nearest conversion of an exact rational.
    pub fn to_fixed(&self, r: &Rat) -> BigInt {
        let num = r.numer() << (self.shift + 1);
        let den = r.denom(); // always positive
        (num + den).div_floor(&(den << 1))
    }

    /// Drop the extra `shift` bits of a double-width product, rounding.
    pub fn round_shift(&self, wide: BigInt) -> BigInt {
        (wide + &self.half) >> self.shift
    }

    pub fn cx_one(&self) -> Cx {
        Cx {
            re: self.one(),
            im: BigInt::zero(),
        }
    }

    pub fn cx_mul(&self, a: &Cx, b: &Cx) -> Cx {
        Cx {
            re: self.round_shift(&a.re * &b.re - &a.im * &b.im),
            im: self.round_shift(&a.re * &b.im + &a.im * &b.re),
        }
    }

    /// atan(1/x) by the alternating inverse-power series, floor-rounded.
    fn atan_inv(&self, x: u64) -> BigInt {
        let x2 = BigInt::from(x) * x;
        let mut acc = BigInt::zero();
        let mut p = self.one() / x;
        let mut k = 0u64;
        while !p.is_zero() {
            let term = &p / (2 * k + 1);
            if k.is_multiple_of(2) {
                acc += term;
            } else {
                acc -= term;
            }
            p /= &x2;
            k += 1;
        }
        acc
    }

    /// pi at the context scale (Machin's formula).
    pub fn pi(&self) -> BigInt {
        self.atan_inv(5) * 16 - self.atan_inv(239) * 4
    }

    /// (cos, sin) of a nonnegative angle below 2*pi, by the Taylor series.
    pub fn sincos(&self, theta: &BigInt) -> (BigInt, BigInt) {
        assert!(!theta.is_negative());
        let mut cos = self.one();
        let mut sin = BigInt::zero();
        let mut p = theta.clone();
        let mut k = 1u64;
        while !p.is_zero() {
            match k % 4 {
                1 => sin += &p,
                2 => cos -= &p,
                3 => sin -= &p,
                _ => cos += &p,
            }
            k += 1;
            p = self.round_shift(&p * theta) / k;
        }
        (cos, sin)
    }

    /// The n-th roots of unity e^(2*pi*i*t/n) for t = 0..n-1.
    ///
    /// Powers are chained multiplications from the primitive root, re-anchored
    /// at the exactly representable quarter turns so the table is exact at
    /// t = 0, n/4, n/2, 3n/4 whenever those are integers.
    pub fn roots_of_unity(&self, n: usize) -> Vec<Cx> {
        let mut w = Vec::with_capacity(n);
        w.push(self.cx_one());
        if n == 1 {
            return w;
        }
        let two_pi = self.pi() << 1u32;
        let nn = BigInt::from(n);
        let theta = ((two_pi << 1u32) + &nn).div_floor(&(&nn << 1u32));
        let (c, s) = self.sincos(&theta);
        let eps = Cx { re: c, im: s };
        for t in 1..n {
            let snapped = if 2 * t == n {
                Some(Cx {
                    re: -self.one(),
                    im: BigInt::zero(),
                })
            } else if 4 * t == n {
                Some(Cx {
                    re: BigInt::zero(),
                    im: self.one(),
                })
            } else if 4 * t == 3 * n {
                Some(Cx {
                    re: BigInt::zero(),
                    im: -self.one(),
                })
            } else {
                None
            };
            let next = snapped.unwrap_or_else(|| self.cx_mul(&w[t - 1], &eps));
            w.push(next);
        }
        w
    }
}
