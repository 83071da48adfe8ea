//! Specialized determinant formulas for the built-in families.
//!
//! Each function here evaluates a closed form in exact rational arithmetic
//! and is validated against both the elimination oracle and the general
//! reduction formula (see the crate's verification suite).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::reduction::{alpha, basis_sequences, AlphaVector};
use crate::scalar::Rat;
use crate::sequence::{FamilyTag, RecurrenceSpec, SequenceWindow};

/// Parameters of U_n = p U_{n-1} + q U_{n-2}, U_1 = a, U_2 = b.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecondOrderParams {
    pub p: Rat,
    pub q: Rat,
    pub a: Rat,
    pub b: Rat,
}

impl SecondOrderParams {
    pub fn new(p: Rat, q: Rat, a: Rat, b: Rat) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::InvalidFamilyParams(
                "second-order q must be nonzero".into(),
            ));
        }
        Ok(SecondOrderParams { p, q, a, b })
    }

    pub fn from_ints(p: i64, q: i64, a: i64, b: i64) -> Result<Self> {
        SecondOrderParams::new(Rat::int(p), Rat::int(q), Rat::int(a), Rat::int(b))
    }

    pub fn spec(&self) -> Result<RecurrenceSpec> {
        FamilyTag::SecondOrder {
            p: self.p.clone(),
            q: self.q.clone(),
            a: self.a.clone(),
            b: self.b.clone(),
        }
        .spec()
    }
}

/// The two printed readings of the second-order formula's geometric factor:
/// `q U_n - b + p a` (the consistent one) versus `q U_n - b + q a`.
/// The `Qa` variant exists only so the verify command can demonstrate that it
/// disagrees with the oracle whenever p != q.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Eq2Variant {
    Pa,
    Qa,
}

impl fmt::Display for Eq2Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eq2Variant::Pa => write!(f, "pa"),
            Eq2Variant::Qa => write!(f, "qa"),
        }
    }
}

impl FromStr for Eq2Variant {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "pa" => Ok(Eq2Variant::Pa),
            "qa" => Ok(Eq2Variant::Qa),
            other => Err(format!("unknown eq2 variant `{other}` (expected pa or qa)")),
        }
    }
}

/// det circ(U_1..U_n) for n > 3:
///
/// ```text
/// (a^2 - b U_n)(a - U_{n+1})^{n-2}
///   + sum_{k=2}^{n-1} (a U_{k+1} - b U_k)(a - U_{n+1})^{k-2} (q U_n - b + p a)^{n-k}
/// ```
pub fn det_second_order(params: &SecondOrderParams, n: usize) -> Result<Rat> {
    det_second_order_variant(params, n, Eq2Variant::Pa)
}

pub fn det_second_order_variant(
    params: &SecondOrderParams,
    n: usize,
    variant: Eq2Variant,
) -> Result<Rat> {
    if n <= 3 {
        return Err(Error::OrderTooSmall { n, m: 3 });
    }
    let u = params.spec()?.generate(n + 1);
    let (a, b) = (&params.a, &params.b);
    let alpha1 = a - u.term(n + 1);
    let scaled_a = match variant {
        Eq2Variant::Pa => &params.p * a,
        Eq2Variant::Qa => &params.q * a,
    };
    let g = &params.q * u.term(n) - b + scaled_a;

    // Ascending power tables; no divisions, so g = 0 is harmless.
    let alpha_pows = power_table(&alpha1, n - 2);
    let g_pows = power_table(&g, n - 2);

    let mut det = (a * a - b * u.term(n)) * &alpha_pows[n - 2];
    for k in 2..n {
        let minor = a * u.term(k + 1) - b * u.term(k);
        if !minor.is_zero() {
            det += minor * &alpha_pows[k - 2] * &g_pows[n - k];
        }
    }
    Ok(det)
}

/// x^0..x^max as a vector.
fn power_table(x: &Rat, max: usize) -> Vec<Rat> {
    let mut pows = Vec::with_capacity(max + 1);
    pows.push(Rat::one());
    for _ in 0..max {
        pows.push(pows.last().expect("nonempty") * x);
    }
    pows
}

/// det circ(F_1..F_n) = (1 - F_{n+1})^{n-1}
///   + F_n^{n-2} sum_{k=1}^{n-1} F_k ((1 - F_{n+1}) / F_n)^{k-1}, n >= 3.
pub fn det_fibonacci_shen(n: usize) -> Result<Rat> {
    if n < 3 {
        return Err(Error::OrderTooSmall { n, m: 2 });
    }
    let f = FamilyTag::Fibonacci.spec()?.generate(n + 1);
    let head = Rat::one() - f.term(n + 1);
    let ratio = &head / f.term(n);
    let mut sum = Rat::zero();
    let mut ratio_pow = Rat::one();
    for k in 1..n {
        sum += f.term(k) * &ratio_pow;
        ratio_pow *= &ratio;
    }
    Ok(head.pow(n as i64 - 1) + f.term(n).pow(n as i64 - 2) * sum)
}

/// det circ(L_1..L_n) = (1 - L_{n+1})^{n-1}
///   + (L_n - 2)^{n-2} sum_{k=1}^{n-1} (L_{k+2} - 3 L_{k+1})
///     ((1 - L_{n+1}) / (L_n - 2))^{k-1}, n >= 3.
pub fn det_lucas_shen(n: usize) -> Result<Rat> {
    if n < 3 {
        return Err(Error::OrderTooSmall { n, m: 2 });
    }
    let l = FamilyTag::Lucas.spec()?.generate(n + 1);
    let head = Rat::one() - l.term(n + 1);
    let denom = l.term(n) - Rat::int(2);
    assert!(!denom.is_zero(), "L_n = 2 cannot happen for n >= 2");
    let ratio = &head / &denom;
    let mut sum = Rat::zero();
    let mut ratio_pow = Rat::one();
    let three = Rat::int(3);
    for k in 1..n {
        sum += (l.term(k + 2) - &three * l.term(k + 1)) * &ratio_pow;
        ratio_pow *= &ratio;
    }
    Ok(head.pow(n as i64 - 1) + denom.pow(n as i64 - 2) * sum)
}

/// Tribonacci terms through a_{n+1} with the a_0 = 0 convention, plus the
/// alpha vector of the reduction. For every n > 3:
/// alpha_1 = 1 - a_{n+1}, alpha_2 = -a_n - a_{n-1}, alpha_3 = -a_n.
#[derive(Clone, Debug)]
pub struct TribonacciContext {
    n: usize,
    window: SequenceWindow,
    alpha: AlphaVector,
}

impl TribonacciContext {
    pub fn new(n: usize) -> Result<Self> {
        if n <= 3 {
            return Err(Error::OrderTooSmall { n, m: 3 });
        }
        let spec = FamilyTag::Tribonacci.spec()?;
        let window = spec.generate(n + 1);
        let alpha = alpha(&spec, n)?;
        Ok(TribonacciContext { n, window, alpha })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> &AlphaVector {
        &self.alpha
    }

    /// Term a_idx, extended by a_0 = 0. The closed form never needs a
    /// negative index or a wrap; both are asserted.
    pub fn a(&self, idx: i64) -> Rat {
        assert!(
            (0..=self.n as i64 + 1).contains(&idx),
            "tribonacci closed form touched a_{idx} outside 0..={}",
            self.n + 1
        );
        if idx == 0 {
            Rat::zero()
        } else {
            self.window.term(idx as usize).clone()
        }
    }

    /// alpha_2^2 - 4 alpha_1 alpha_3; negative for every n > 3.
    pub fn discriminant(&self) -> Rat {
        let a2 = self.alpha.get(2);
        let prod = self.alpha.get(1) * self.alpha.get(3);
        a2 * a2 - Rat::int(4) * prod
    }
}

/// det circ(a_1..a_n) for the tribonacci sequence, n > 3:
///
/// ```text
/// (1 - a_{n+1})^{n-3} * (
///     sum_{2<=i<j<=n-2} (a_{i-2} a_{j-1} - a_{i-1} a_{j-2})
///                       (alpha_3/alpha_1)^{n-j-1} b^(1)_{j-i+2}
///   + sum_{i=2}^{n-2} [ (a_{i-2}+a_{i-1}) + a_{n-1}(a_{i+2}-2a_{i+1})
///                       + a_n(2a_i - a_{i+2}) ] b^(1)_{n-i+1}
///   + sum_{i=2}^{n-2} [ -a_{i-1} + a_n(a_{i+2}-2a_{i+1}) ]
///                     (alpha_1/alpha_3) b^(1)_{n-i+2}
///   + 2a_n^2 - 2a_n - a_{n-1} + 1 )
/// ```
pub fn det_tribonacci(n: usize) -> Result<Rat> {
    let ctx = TribonacciContext::new(n)?;
    let al = ctx.alpha();
    let alpha1 = al.get(1).clone();
    let alpha3 = al.get(3).clone();
    assert!(!alpha1.is_zero() && !alpha3.is_zero());

    let bases = basis_sequences(al, n)?;
    let b1 = &bases[0];
    let ni = n as i64;

    // Double sum over 2 <= i < j <= n-2.
    let ratio31 = &alpha3 / &alpha1;
    let ratio31_pows = power_table(&ratio31, n.saturating_sub(4));
    let mut total = Rat::zero();
    for i in 2..=n.saturating_sub(3) {
        for j in i + 1..=n - 2 {
            let ii = i as i64;
            let jj = j as i64;
            let delta = ctx.a(ii - 2) * ctx.a(jj - 1) - ctx.a(ii - 1) * ctx.a(jj - 2);
            if !delta.is_zero() {
                total += delta * &ratio31_pows[n - j - 1] * b1.term(j - i + 2);
            }
        }
    }

    // Single sums over 2 <= i <= n-2.
    let two = Rat::int(2);
    let a_n1 = ctx.a(ni - 1);
    let a_n = ctx.a(ni);
    let ratio13 = &alpha1 / &alpha3;
    for i in 2..=n - 2 {
        let ii = i as i64;
        let mid = &ctx.a(ii + 2) - &two * ctx.a(ii + 1);
        let coeff_a = (ctx.a(ii - 2) + ctx.a(ii - 1))
            + &a_n1 * &mid
            + &a_n * (&two * ctx.a(ii) - ctx.a(ii + 2));
        total += coeff_a * b1.term(n - i + 1);

        let coeff_b = -ctx.a(ii - 1) + &a_n * &mid;
        if !coeff_b.is_zero() {
            total += coeff_b * &ratio13 * b1.term(n - i + 2);
        }
    }

    // Constant block.
    total += &two * &a_n * &a_n - &two * &a_n - &a_n1 + Rat::one();

    Ok(alpha1.pow(ni - 3) * total)
}

/// det circ(a, a^2, ..., a^n) = a^n (1 - a^n)^{n-1}, a != 0, n >= 1.
pub fn det_geometric(a: &Rat, n: usize) -> Result<Rat> {
    if a.is_zero() {
        return Err(Error::ZeroRatio);
    }
    if n == 0 {
        return Err(Error::OrderTooSmall { n, m: 0 });
    }
    let a_n = a.pow(n as i64);
    Ok(&a_n * (Rat::one() - &a_n).pow(n as i64 - 1))
}

/// Exact check of the basis-sequence identity
/// `b^(1)_k b^(2)_t - b^(1)_t b^(2)_k = (alpha_3/alpha_1)^{t-2} b^(1)_{k-t+2}`
/// for a third-order alpha vector and k >= t >= 2. Both sides are evaluated
/// by iterating the recurrence; no characteristic roots are involved.
pub fn binet_wronskian_identity(alpha: &AlphaVector, k: usize, t: usize) -> Result<bool> {
    assert_eq!(alpha.m(), 3, "identity is about third-order alpha vectors");
    assert!(k >= t && t >= 2, "requires k >= t >= 2");
    if alpha.get(1).is_zero() || alpha.get(3).is_zero() {
        return Err(Error::DegenerateAlpha);
    }
    let bases = basis_sequences(alpha, k.max(2))?;
    let (b1, b2) = (&bases[0], &bases[1]);
    let lhs = b1.term(k) * b2.term(t) - b1.term(t) * b2.term(k);
    let rhs = (alpha.get(3) / alpha.get(1)).pow(t as i64 - 2) * b1.term(k - t + 2);
    Ok(lhs == rhs)
}
