//! Determinant reports: value, method tag, diagnostic flags, timing.

use std::fmt;
use std::time::Duration;

use crate::oracle::DyadicComplex;
use crate::scalar::Rat;

/// Which specialized formula produced a `Method::ClosedForm` value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedFormKind {
    SecondOrder,
    FibonacciShen,
    LucasShen,
    Tribonacci,
    Geometric,
}

impl ClosedFormKind {
    pub fn name(&self) -> &'static str {
        match self {
            ClosedFormKind::SecondOrder => "second-order",
            ClosedFormKind::FibonacciShen => "fibonacci-shen",
            ClosedFormKind::LucasShen => "lucas-shen",
            ClosedFormKind::Tribonacci => "tribonacci",
            ClosedFormKind::Geometric => "geometric",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Bareiss,
    Spectral,
    Lemma,
    ClosedForm(ClosedFormKind),
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Bareiss => write!(f, "bareiss"),
            Method::Spectral => write!(f, "spectral"),
            Method::Lemma => write!(f, "lemma"),
            Method::ClosedForm(kind) => write!(f, "closed:{}", kind.name()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flag {
    /// alpha_1 was zero, the reduction formula was skipped and the value
    /// comes from the elimination oracle instead.
    Alpha1ZeroFallback,
    /// The value is a high-precision float, not exact.
    FloatApproximation,
}

impl Flag {
    pub fn name(&self) -> &'static str {
        match self {
            Flag::Alpha1ZeroFallback => "alpha1-zero-fallback",
            Flag::FloatApproximation => "float-approximation",
        }
    }
}

/// Exact or approximate determinant value.
#[derive(Clone, Debug)]
pub enum DetValue {
    Exact(Rat),
    Approx(DyadicComplex),
}

/// One determinant computation: value, route, flags and wall time.
#[derive(Clone, Debug)]
pub struct DetReport {
    pub value: DetValue,
    pub method: Method,
    pub flags: Vec<Flag>,
    pub elapsed: Duration,
}

impl DetReport {
    /// Panics if the flag set is inconsistent with the method
    /// (FloatApproximation must be present exactly for spectral results).
    pub fn new(value: DetValue, method: Method, flags: Vec<Flag>, elapsed: Duration) -> Self {
        let has_float = flags.contains(&Flag::FloatApproximation);
        assert_eq!(
            has_float,
            method == Method::Spectral,
            "FloatApproximation flag must accompany exactly the spectral method"
        );
        DetReport {
            value,
            method,
            flags,
            elapsed,
        }
    }

    pub fn exact(value: Rat, method: Method, elapsed: Duration) -> Self {
        DetReport::new(DetValue::Exact(value), method, Vec::new(), elapsed)
    }

    /// The exact value, when this report carries one.
    pub fn exact_value(&self) -> Option<&Rat> {
        match &self.value {
            DetValue::Exact(r) => Some(r),
            DetValue::Approx(_) => None,
        }
    }

    /// Determinant rendered for output: exact values as integer/fraction
    /// strings, spectral values as a plain decimal (12 fractional digits).
    pub fn det_string(&self) -> String {
        match &self.value {
            DetValue::Exact(r) => r.to_string(),
            DetValue::Approx(c) => c.re.decimal(12),
        }
    }

    /// |Im| of a spectral value.
    pub fn imag_residual(&self) -> Option<f64> {
        match &self.value {
            DetValue::Approx(c) => Some(c.im.abs().to_f64()),
            DetValue::Exact(_) => None,
        }
    }
}
