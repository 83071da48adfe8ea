//! Arbitrary-precision rational scalar.
//!
//! `Rat` wraps `num_rational::BigRational` and is the universal scalar for
//! every exact code path in this crate. Values are always kept in lowest
//! terms with a positive denominator, so `==` is true mathematical equality
//! and determinants computed along different routes can be compared exactly.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar (arbitrary precision).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    /// Integer-valued rational.
    pub fn int(v: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(v)))
    }

    /// `num / den`. Returns `None` when `den` is zero.
    pub fn new(num: BigInt, den: BigInt) -> Option<Self> {
        if den.is_zero() {
            None
        } else {
            Some(Rat(BigRational::new(num, den)))
        }
    }

    /// Exact conversion from a finite `f64` (every finite float is a dyadic
    /// rational). Returns `None` for NaN or infinities.
    pub fn from_f64(v: f64) -> Option<Self> {
        BigRational::from_float(v).map(Rat)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// True when the denominator is 1.
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Rat {
        assert!(!self.is_zero(), "Rat::recip of zero");
        Rat(self.0.recip())
    }

    /// Integer power with the `x^0 = 1` convention (also for `x = 0`).
    /// Negative exponents invert; panics when inverting zero.
    pub fn pow(&self, exp: i64) -> Rat {
        if exp == 0 {
            return Rat::one();
        }
        let base = if exp < 0 { self.recip() } else { self.clone() };
        let e = exp.unsigned_abs();
        assert!(e <= u32::MAX as u64, "Rat::pow exponent too large");
        Rat(BigRational::new(
            base.0.numer().pow(e as u32),
            base.0.denom().pow(e as u32),
        ))
    }

    /// Approximate value, for diagnostics only. Large magnitudes saturate to
    /// +/- infinity instead of producing NaN.
    pub fn to_f64(&self) -> f64 {
        let num_bits = self.0.numer().bits() as i64;
        let den_bits = self.0.denom().bits() as i64;
        // Shift both parts into comfortable f64 range, preserving the ratio.
        let shift = (num_bits.max(den_bits) - 512).max(0) as u64;
        let num = (self.0.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let den = (self.0.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        if den == 0.0 {
            return if num >= 0.0 {
                f64::INFINITY
            } else {
                f64::NEG_INFINITY
            };
        }
        num / den
    }

    pub fn max(self, other: Rat) -> Rat {
        if self.0 < other.0 {
            other
        } else {
            self
        }
    }

    pub(crate) fn inner(&self) -> &BigRational {
        &self.0
    }
}

impl fmt::Display for Rat {
    /// Integers print as plain decimal integers, everything else as `p/q`.
    /// Never scientific notation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Failure to parse a `Rat` from text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseRatError(pub String);

impl fmt::Display for ParseRatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational literal: {}", self.0)
    }
}

impl std::error::Error for ParseRatError {}

impl FromStr for Rat {
    type Err = ParseRatError;

    /// Accepts `p`, `p/q` and plain decimal forms like `-0.5`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() {
            return Err(ParseRatError(s.to_owned()));
        }
        if let Some((num, den)) = t.split_once('/') {
            let n = BigInt::from_str(num.trim()).map_err(|_| ParseRatError(s.to_owned()))?;
            let d = BigInt::from_str(den.trim()).map_err(|_| ParseRatError(s.to_owned()))?;
            return Rat::new(n, d).ok_or_else(|| ParseRatError(s.to_owned()));
        }
        if let Some((int_part, frac_part)) = t.split_once('.') {
            if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(ParseRatError(s.to_owned()));
            }
            let negative = int_part.trim_start().starts_with('-');
            let whole = if int_part.is_empty() || int_part == "-" || int_part == "+" {
                BigInt::zero()
            } else {
                BigInt::from_str(int_part).map_err(|_| ParseRatError(s.to_owned()))?
            };
            let frac = BigInt::from_str(frac_part).map_err(|_| ParseRatError(s.to_owned()))?;
            let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
            let frac_signed = if negative { -frac } else { frac };
            let num = whole * &scale + frac_signed;
            return Ok(Rat(BigRational::new(num, scale)));
        }
        BigInt::from_str(t)
            .map(|n| Rat(BigRational::from_integer(n)))
            .map_err(|_| ParseRatError(s.to_owned()))
    }
}

impl From<i64> for Rat {
    fn from(v: i64) -> Self {
        Rat::int(v)
    }
}

impl From<i32> for Rat {
    fn from(v: i32) -> Self {
        Rat::int(v as i64)
    }
}

impl From<BigInt> for Rat {
    fn from(v: BigInt) -> Self {
        Rat(BigRational::from_integer(v))
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident) => {
        impl $imp<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat($imp::$method(self.0, rhs.0))
            }
        }
        impl<'a> $imp<&'a Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat($imp::$method(self.0, &rhs.0))
            }
        }
        impl<'a> $imp<Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat($imp::$method(&self.0, rhs.0))
            }
        }
        impl<'a, 'b> $imp<&'b Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'b Rat) -> Rat {
                Rat($imp::$method(&self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl AddAssign<Rat> for Rat {
    fn add_assign(&mut self, rhs: Rat) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl SubAssign<Rat> for Rat {
    fn sub_assign(&mut self, rhs: Rat) {
        self.0 -= rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

impl MulAssign<Rat> for Rat {
    fn mul_assign(&mut self, rhs: Rat) {
        self.0 *= rhs.0;
    }
}

impl DivAssign<&Rat> for Rat {
    fn div_assign(&mut self, rhs: &Rat) {
        self.0 /= &rhs.0;
    }
}

impl DivAssign<Rat> for Rat {
    fn div_assign(&mut self, rhs: Rat) {
        self.0 /= rhs.0;
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, v| acc + v)
    }
}

impl PartialEq<i64> for Rat {
    fn eq(&self, other: &i64) -> bool {
        self == &Rat::int(*other)
    }
}

impl PartialOrd<i64> for Rat {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(Rat::int(*other).inner())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_integer_and_fraction() {
        assert_eq!(Rat::int(-35).to_string(), "-35");
        let half = Rat::new(BigInt::from(1), BigInt::from(2)).unwrap();
        assert_eq!(half.to_string(), "1/2");
        let norm = Rat::new(BigInt::from(2), BigInt::from(-4)).unwrap();
        assert_eq!(norm.to_string(), "-1/2");
    }

    #[test]
    fn parse_forms() {
        assert_eq!("-35".parse::<Rat>().unwrap(), Rat::int(-35));
        assert_eq!(
            "3/4".parse::<Rat>().unwrap(),
            Rat::new(BigInt::from(3), BigInt::from(4)).unwrap()
        );
        assert_eq!(
            "-0.5".parse::<Rat>().unwrap(),
            Rat::new(BigInt::from(-1), BigInt::from(2)).unwrap()
        );
        assert_eq!(
            "0.25".parse::<Rat>().unwrap(),
            Rat::new(1.into(), 4.into()).unwrap()
        );
        assert!("1/0".parse::<Rat>().is_err());
        assert!("abc".parse::<Rat>().is_err());
        assert!("".parse::<Rat>().is_err());
    }

    #[test]
    fn pow_conventions() {
        assert_eq!(Rat::zero().pow(0), Rat::one());
        assert_eq!(Rat::int(2).pow(10), Rat::int(1024));
        assert_eq!(Rat::int(2).pow(-2), Rat::new(1.into(), 4.into()).unwrap());
        assert_eq!(Rat::int(-3).pow(3), Rat::int(-27));
    }

    #[test]
    fn from_f64_exact_dyadic() {
        assert_eq!(
            Rat::from_f64(0.5).unwrap(),
            Rat::new(1.into(), 2.into()).unwrap()
        );
        assert_eq!(
            Rat::from_f64(1e-9).unwrap().to_f64(),
            1e-9 // round-trips because the f64 is converted exactly
        );
        assert!(Rat::from_f64(f64::NAN).is_none());
    }

    #[test]
    fn to_f64_handles_large_values() {
        let big = Rat::int(10).pow(500);
        assert_eq!(big.to_f64(), f64::INFINITY);
        let ratio = &big / &(Rat::int(10).pow(500) * Rat::int(4));
        assert!((ratio.to_f64() - 0.25).abs() < 1e-15);
    }
}
