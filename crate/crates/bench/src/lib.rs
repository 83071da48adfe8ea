//! Shared input builders for the determinant benchmarks
//! (see `benches/determinants.rs`).

use circdet_core::{CirculantMatrix, FamilyTag, Mat, Rat, RecurrenceSpec};

pub fn fibonacci() -> RecurrenceSpec {
    FamilyTag::Fibonacci.spec().expect("valid family")
}

pub fn tribonacci() -> RecurrenceSpec {
    FamilyTag::Tribonacci.spec().expect("valid family")
}

pub fn geometric(ratio: i64) -> RecurrenceSpec {
    FamilyTag::Geometric(Rat::int(ratio))
        .spec()
        .expect("nonzero ratio")
}

pub fn circulant(spec: &RecurrenceSpec, n: usize) -> CirculantMatrix {
    CirculantMatrix::from_spec(spec, n).expect("n >= 1")
}

pub fn dense(spec: &RecurrenceSpec, n: usize) -> Mat {
    circulant(spec, n).materialize()
}
