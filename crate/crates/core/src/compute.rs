//! Method dispatch shared by the CLI and the verification suite.

use std::time::Instant;

use crate::circulant::CirculantMatrix;
use crate::closed_forms::{
    det_fibonacci_shen, det_geometric, det_lucas_shen, det_second_order, det_tribonacci,
    SecondOrderParams,
};
use crate::error::{Error, Result};
use crate::oracle::{
    det_bareiss, det_bareiss_report, det_spectral_report, ClosedFormKind, DetReport, DetValue,
    Flag, Method,
};
use crate::reduction::det_lemma;
use crate::sequence::{FamilyTag, RecurrenceSpec};

/// The closed form applicable to a spec, when there is one.
///
/// A family tag picks the family's own formula; otherwise the spec's shape
/// decides: order 1 with a_1 = c_1 is geometric, order 2 is the general
/// second-order formula, and the exact tribonacci spec gets its double-sum
/// form. Anything else has no closed form here.
pub fn closed_form_for(
    spec: &RecurrenceSpec,
    family: Option<&FamilyTag>,
) -> Option<ClosedFormKind> {
    if let Some(tag) = family {
        return Some(match tag {
            FamilyTag::Fibonacci => ClosedFormKind::FibonacciShen,
            FamilyTag::Lucas => ClosedFormKind::LucasShen,
            FamilyTag::Jacobsthal | FamilyTag::JacobsthalLucas | FamilyTag::SecondOrder { .. } => {
                ClosedFormKind::SecondOrder
            }
            FamilyTag::Tribonacci => ClosedFormKind::Tribonacci,
            FamilyTag::Geometric(_) => ClosedFormKind::Geometric,
        });
    }
    match spec.order() {
        1 if spec.initials()[0] == spec.coeffs()[0] => Some(ClosedFormKind::Geometric),
        2 => Some(ClosedFormKind::SecondOrder),
        3 if Some(spec) == FamilyTag::Tribonacci.spec().ok().as_ref() => {
            Some(ClosedFormKind::Tribonacci)
        }
        _ => None,
    }
}

/// Evaluate the chosen closed form as a timed report. The kind must match
/// the spec (normally it comes from `closed_form_for`).
pub fn det_closed_report(
    spec: &RecurrenceSpec,
    n: usize,
    kind: ClosedFormKind,
) -> Result<DetReport> {
    let start = Instant::now();
    let value = match kind {
        ClosedFormKind::FibonacciShen => det_fibonacci_shen(n)?,
        ClosedFormKind::LucasShen => det_lucas_shen(n)?,
        ClosedFormKind::Tribonacci => det_tribonacci(n)?,
        ClosedFormKind::Geometric => det_geometric(&spec.initials()[0], n)?,
        ClosedFormKind::SecondOrder => {
            assert_eq!(
                spec.order(),
                2,
                "second-order closed form on order {}",
                spec.order()
            );
            let params = SecondOrderParams::new(
                spec.coeffs()[0].clone(),
                spec.coeffs()[1].clone(),
                spec.initials()[0].clone(),
                spec.initials()[1].clone(),
            )?;
            det_second_order(&params, n)?
        }
    };
    Ok(DetReport::exact(
        value,
        Method::ClosedForm(kind),
        start.elapsed(),
    ))
}

/// Elimination oracle on the materialized circulant of (spec, n), timed.
pub fn det_oracle_report(spec: &RecurrenceSpec, n: usize) -> Result<DetReport> {
    let c = CirculantMatrix::from_spec(spec, n)?;
    Ok(det_bareiss_report(&c.materialize()))
}

/// The reduction formula with its documented degenerate-alpha fallback:
/// when alpha_1 = 0 the value comes from the elimination oracle and the
/// report carries `Alpha1ZeroFallback`.
pub fn det_lemma_or_fallback(spec: &RecurrenceSpec, n: usize) -> Result<DetReport> {
    match det_lemma(spec, n) {
        Err(Error::DegenerateAlpha1) => {
            let start = Instant::now();
            let c = CirculantMatrix::from_spec(spec, n)?;
            let value = det_bareiss(&c.materialize());
            Ok(DetReport::new(
                DetValue::Exact(value),
                Method::Bareiss,
                vec![Flag::Alpha1ZeroFallback],
                start.elapsed(),
            ))
        }
        other => other,
    }
}

/// Spectral estimate as a timed report.
pub fn det_spectral_for(spec: &RecurrenceSpec, n: usize, precision: u32) -> Result<DetReport> {
    let c = CirculantMatrix::from_spec(spec, n)?;
    det_spectral_report(&c, precision)
}
