//! Exhaustive equivalence checks for the closed forms at desk scale.

use circdet_core::closed_forms::{
    binet_wronskian_identity, det_fibonacci_shen, det_geometric, det_lucas_shen, det_second_order,
    det_tribonacci, SecondOrderParams, TribonacciContext,
};
use circdet_core::reduction::{alpha, det_lemma};
use circdet_core::{det_bareiss, CirculantMatrix, FamilyTag, Rat};

fn oracle(spec: &circdet_core::RecurrenceSpec, n: usize) -> Rat {
    det_bareiss(&CirculantMatrix::from_spec(spec, n).unwrap().materialize())
}

#[test]
fn second_order_rows_match_oracle_and_lemma() {
    let rows = [(1, 1, 1, 1), (1, 1, 1, 3), (1, 2, 1, 1), (1, 2, 1, 3)];
    for (p, q, a, b) in rows {
        let params = SecondOrderParams::from_ints(p, q, a, b).unwrap();
        let spec = params.spec().unwrap();
        for n in 4..=12 {
            let expect = oracle(&spec, n);
            assert_eq!(
                det_second_order(&params, n).unwrap(),
                expect,
                "({p},{q},{a},{b}) n={n}"
            );
            assert_eq!(det_lemma(&spec, n).unwrap().exact_value().unwrap(), &expect);
        }
    }
}

#[test]
fn shen_forms_match_oracle_and_generic_form() {
    let fib = FamilyTag::Fibonacci.spec().unwrap();
    let fib_params = SecondOrderParams::from_ints(1, 1, 1, 1).unwrap();
    for n in 3..=12 {
        let expect = oracle(&fib, n);
        assert_eq!(det_fibonacci_shen(n).unwrap(), expect, "fibonacci n={n}");
        if n > 3 {
            assert_eq!(det_second_order(&fib_params, n).unwrap(), expect);
        }
    }

    let lucas = FamilyTag::Lucas.spec().unwrap();
    let lucas_params = SecondOrderParams::from_ints(1, 1, 1, 3).unwrap();
    for n in 3..=12 {
        let expect = oracle(&lucas, n);
        assert_eq!(det_lucas_shen(n).unwrap(), expect, "lucas n={n}");
        if n > 3 {
            assert_eq!(det_second_order(&lucas_params, n).unwrap(), expect);
        }
    }
}

#[test]
fn tribonacci_matches_oracle_and_lemma() {
    let tri = FamilyTag::Tribonacci.spec().unwrap();
    for n in 4..=12 {
        let expect = oracle(&tri, n);
        let closed = det_tribonacci(n).unwrap();
        assert_eq!(closed, expect, "tribonacci vs oracle n={n}");
        assert_eq!(
            &closed,
            det_lemma(&tri, n).unwrap().exact_value().unwrap(),
            "tribonacci vs lemma n={n}"
        );
    }
}

#[test]
fn geometric_matches_oracle_for_rational_ratios() {
    let half = Rat::new(1.into(), 2.into()).unwrap();
    for a in [Rat::int(-2), Rat::int(-1), half, Rat::int(2), Rat::int(3)] {
        let spec = FamilyTag::Geometric(a.clone()).spec().unwrap();
        for n in 1..=10 {
            assert_eq!(
                det_geometric(&a, n).unwrap(),
                oracle(&spec, n),
                "a={a} n={n}"
            );
        }
    }
}

#[test]
fn tribonacci_discriminant_negative_up_to_32() {
    for n in 4..=32 {
        let ctx = TribonacciContext::new(n).unwrap();
        assert!(ctx.discriminant().is_negative(), "n={n}");
    }
}

#[test]
fn wronskian_identity_exhaustive() {
    let tri = FamilyTag::Tribonacci.spec().unwrap();
    for n in 4..=12 {
        let al = alpha(&tri, n).unwrap();
        for t in 2..=12usize {
            for k in t..=12 {
                assert!(
                    binet_wronskian_identity(&al, k, t).unwrap(),
                    "n={n} k={k} t={t}"
                );
            }
        }
    }
}
