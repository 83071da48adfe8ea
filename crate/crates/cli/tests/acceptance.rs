//! Acceptance suite: one test per promised behavior, each printing a
//! PASS/FAIL line (visible with `cargo test -- --nocapture`).
//!
//! The heavyweight randomized report (200 seeded specs, n up to 12) is
//! computed once and shared by the criteria that examine it.

use std::process::Command;
use std::sync::OnceLock;

use circdet_core::closed_forms::{
    binet_wronskian_identity, det_fibonacci_shen, det_geometric, det_lucas_shen, det_second_order,
    det_second_order_variant, det_tribonacci, Eq2Variant, SecondOrderParams,
};
use circdet_core::compute::det_lemma_or_fallback;
use circdet_core::reduction::{alpha, det_lemma};
use circdet_core::{
    crosscheck, det_bareiss, det_spectral, run_verify, CirculantMatrix, Error, FamilyTag, Flag,
    Rat, RecurrenceSpec, VerifyConfig, VerifyReport,
};

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn criterion(name: &str, body: impl FnOnce() -> Result<(), String>) {
    match body() {
        Ok(()) => println!("{name}: PASS"),
        Err(msg) => {
            println!("{name}: FAIL - {msg}");
            panic!("{name} failed: {msg}");
        }
    }
}

static FULL_REPORT: OnceLock<VerifyReport> = OnceLock::new();

/// Seed 42, 200 random specs with m in 1..=4, entries in [-3, 3], c_m != 0,
/// alpha_1 != 0, checked at every n in (m, 12].
fn full_report() -> &'static VerifyReport {
    FULL_REPORT.get_or_init(|| run_verify(&VerifyConfig::default()))
}

fn oracle(spec: &RecurrenceSpec, n: usize) -> Rat {
    det_bareiss(&CirculantMatrix::from_spec(spec, n).unwrap().materialize())
}

fn built_in_families() -> Vec<FamilyTag> {
    vec![
        FamilyTag::Fibonacci,
        FamilyTag::Lucas,
        FamilyTag::Jacobsthal,
        FamilyTag::JacobsthalLucas,
        FamilyTag::Tribonacci,
        FamilyTag::Geometric(Rat::int(2)),
        FamilyTag::Geometric(Rat::new(1.into(), 2.into()).unwrap()),
    ]
}

fn circdet_bin(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_circdet"))
        .args(args)
        .env_remove("CIRCDET_SEED")
        .output()
        .expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn criterion_1_lemma_oracle_equivalence() {
    criterion(
        "criterion 1 (reduction formula = elimination oracle: families and 200 random specs, exact)",
        || {
            for tag in built_in_families() {
                let spec = tag.spec().unwrap();
                for n in spec.order() + 1..=12 {
                    let al = alpha(&spec, n).unwrap();
                    if al.alpha1().is_zero() {
                        continue; // outside the formula's hypothesis
                    }
                    let lemma = det_lemma(&spec, n).unwrap();
                    let expect = oracle(&spec, n);
                    ensure!(
                        lemma.exact_value() == Some(&expect),
                        "{} n={n}: lemma {} != oracle {expect}",
                        tag.name(),
                        lemma.det_string()
                    );
                }
            }
            let report = full_report();
            ensure!(report.trials >= 200, "only {} qualifying specs", report.trials);
            let suite = report.suite("lemma-vs-oracle").expect("suite present");
            ensure!(
                suite.mismatches.is_empty(),
                "{} mismatches, first: {:?}",
                suite.mismatches.len(),
                suite.mismatches.first()
            );
            ensure!(suite.checks >= 200 * 8, "suspiciously few checks: {}", suite.checks);
            Ok(())
        },
    );
}

#[test]
fn criterion_2_closed_form_equivalences() {
    criterion(
        "criterion 2 (closed forms = oracle, exact for all admissible n <= 12; spot anchors)",
        || {
            // Spot anchors first.
            ensure!(
                det_fibonacci_shen(4).unwrap() == Rat::int(-35),
                "fibonacci n=4 anchor"
            );
            ensure!(
                det_lucas_shen(4).unwrap() == Rat::int(-1875),
                "lucas n=4 anchor"
            );
            let jac = SecondOrderParams::from_ints(1, 2, 1, 1).unwrap();
            ensure!(
                det_second_order(&jac, 4).unwrap() == Rat::int(-400),
                "jacobsthal n=4 anchor"
            );
            ensure!(
                det_tribonacci(4).unwrap() == Rat::int(-160),
                "tribonacci n=4 anchor"
            );

            let rows = [(1, 1, 1, 1), (1, 1, 1, 3), (1, 2, 1, 1), (1, 2, 1, 3)];
            for (p, q, a, b) in rows {
                let params = SecondOrderParams::from_ints(p, q, a, b).unwrap();
                let spec = params.spec().unwrap();
                for n in 4..=12 {
                    ensure!(
                        det_second_order(&params, n).unwrap() == oracle(&spec, n),
                        "second-order ({p},{q},{a},{b}) n={n}"
                    );
                }
            }

            let fib = FamilyTag::Fibonacci.spec().unwrap();
            for n in 3..=12 {
                ensure!(
                    det_fibonacci_shen(n).unwrap() == oracle(&fib, n),
                    "fibonacci shen n={n}"
                );
            }
            let lucas = FamilyTag::Lucas.spec().unwrap();
            for n in 4..=12 {
                ensure!(
                    det_lucas_shen(n).unwrap() == oracle(&lucas, n),
                    "lucas shen n={n}"
                );
            }
            let tri = FamilyTag::Tribonacci.spec().unwrap();
            for n in 4..=12 {
                let closed = det_tribonacci(n).unwrap();
                ensure!(closed == oracle(&tri, n), "tribonacci vs oracle n={n}");
                ensure!(
                    Some(&closed) == det_lemma(&tri, n).unwrap().exact_value(),
                    "tribonacci vs reduction formula n={n}"
                );
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_3_eq2_disambiguation() {
    criterion(
        "criterion 3 (second-order variant: qa misses the oracle at Jacobsthal n=4, pa matches)",
        || {
            let jac = SecondOrderParams::from_ints(1, 2, 1, 1).unwrap();
            let spec = jac.spec().unwrap();
            let expect = oracle(&spec, 4);
            ensure!(expect == Rat::int(-400), "oracle anchor");
            let pa = det_second_order_variant(&jac, 4, Eq2Variant::Pa).unwrap();
            let qa = det_second_order_variant(&jac, 4, Eq2Variant::Qa).unwrap();
            ensure!(pa == expect, "pa variant must match, got {pa}");
            ensure!(qa == Rat::int(-378), "qa variant must give -378, got {qa}");
            ensure!(qa != expect, "qa variant must disagree with the oracle");

            // The verify command demonstrates both readings.
            let (out_pa, _, code_pa) = circdet_bin(&[
                "verify",
                "--families-only",
                "--n-max",
                "6",
                "--eq2-variant",
                "pa",
            ]);
            ensure!(code_pa == 0, "pa verify exited {code_pa}");
            ensure!(
                out_pa.contains("qa=-378"),
                "pa verify must still report the qa demo value"
            );

            let (out_qa, _, code_qa) = circdet_bin(&[
                "verify",
                "--families-only",
                "--n-max",
                "6",
                "--eq2-variant",
                "qa",
            ]);
            ensure!(code_qa != 0, "qa verify must exit nonzero");
            ensure!(
                out_qa.contains("-378") && out_qa.contains("-400"),
                "qa verify must report the -378 vs -400 mismatch"
            );
            Ok(())
        },
    );
}

#[test]
fn criterion_4_geometric_closed_form() {
    criterion(
        "criterion 4 (geometric: det = a^n (1-a^n)^(n-1) = oracle for a in {-2,-1,1/2,2,3}, n <= 10)",
        || {
            ensure!(det_geometric(&Rat::int(2), 3).unwrap() == Rat::int(392), "a=2 n=3 anchor");
            let half = Rat::new(1.into(), 2.into()).unwrap();
            for a in [Rat::int(-2), Rat::int(-1), half, Rat::int(2), Rat::int(3)] {
                let spec = FamilyTag::Geometric(a.clone()).spec().unwrap();
                for n in 1..=10 {
                    ensure!(
                        det_geometric(&a, n).unwrap() == oracle(&spec, n),
                        "a={a} n={n}"
                    );
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_5_transform_facts() {
    criterion(
        "criterion 5 (det P = det Q = (-1)^(n(n+1)/2-1) and P*A*Q structure on the random suite)",
        || {
            let report = full_report();
            let suite = report.suite("transforms").expect("suite present");
            ensure!(
                suite.mismatches.is_empty(),
                "{} mismatches, first: {:?}",
                suite.mismatches.len(),
                suite.mismatches.first()
            );
            // Three checks per (spec, n): the structure plus both signs.
            ensure!(
                suite.checks >= 200 * 8 * 3,
                "suspiciously few checks: {}",
                suite.checks
            );
            Ok(())
        },
    );
}

#[test]
fn criterion_6_wronskian_identity() {
    criterion(
        "criterion 6 (basis-sequence identity exact for 2 <= t <= k <= 12, tribonacci n in 4..=12)",
        || {
            let tri = FamilyTag::Tribonacci.spec().unwrap();
            for n in 4..=12 {
                let al = alpha(&tri, n).unwrap();
                for t in 2..=12usize {
                    for k in t..=12 {
                        ensure!(
                            binet_wronskian_identity(&al, k, t).unwrap(),
                            "identity failed at n={n}, k={k}, t={t}"
                        );
                    }
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_7_spectral_crosscheck() {
    criterion(
        "criterion 7 (spectral oracle crosschecks Bareiss at 128 bits, rel tol 1e-9, families n <= 24)",
        || {
            for tag in built_in_families() {
                let spec = tag.spec().unwrap();
                for n in 1..=24 {
                    let circ = CirculantMatrix::from_spec(&spec, n).unwrap();
                    let exact = det_bareiss(&circ.materialize());
                    let est = det_spectral(&circ, 128).unwrap();
                    let cc = crosscheck(&exact, &est, 1e-9);
                    ensure!(
                        cc.pass,
                        "{} n={n}: spectral {} vs exact {exact}",
                        tag.name(),
                        est.value.re.decimal(24)
                    );
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_8_degenerate_fallback() {
    criterion(
        "criterion 8 (alpha_1 = 0 routes to the flagged Bareiss fallback with the oracle value)",
        || {
            // Period-two sequence 1, 2, 1, 2, ...: a_{n+1} = a_1 for even n.
            let spec = RecurrenceSpec::from_ints(&[0, 1], &[1, 2]).unwrap();
            for n in [4usize, 6, 8] {
                ensure!(
                    alpha(&spec, n).unwrap().alpha1().is_zero(),
                    "alpha_1 should vanish at n={n}"
                );
                ensure!(
                    matches!(det_lemma(&spec, n), Err(Error::DegenerateAlpha1)),
                    "det_lemma must refuse at n={n}"
                );
                let report = det_lemma_or_fallback(&spec, n).unwrap();
                ensure!(
                    report.flags.contains(&Flag::Alpha1ZeroFallback),
                    "fallback flag missing at n={n}"
                );
                let expect = oracle(&spec, n);
                ensure!(
                    report.exact_value() == Some(&expect),
                    "fallback value wrong at n={n}"
                );
            }
            // End to end through the CLI.
            let (out, _, code) = circdet_bin(&[
                "det", "--coeffs", "0,1", "--init", "1,2", "--n", "4", "--method", "lemma",
            ]);
            ensure!(code == 0, "cli exited {code}");
            ensure!(
                out.contains("alpha1-zero-fallback"),
                "cli output must carry the fallback flag: {out}"
            );
            Ok(())
        },
    );
}

#[test]
fn criterion_9_verify_determinism() {
    criterion(
        "criterion 9 (two verify runs with one seed produce byte-identical reports)",
        || {
            let args = ["verify", "--trials", "20", "--n-max", "10", "--seed", "7"];
            let (out1, _, code1) = circdet_bin(&args);
            let (out2, _, code2) = circdet_bin(&args);
            ensure!(code1 == 0 && code2 == 0, "verify exited {code1}/{code2}");
            ensure!(out1 == out2, "plain reports differ between runs");

            let json_args = [
                "verify", "--trials", "20", "--n-max", "10", "--seed", "7", "--format", "json",
            ];
            let (j1, _, jc1) = circdet_bin(&json_args);
            let (j2, _, jc2) = circdet_bin(&json_args);
            ensure!(jc1 == 0 && jc2 == 0, "json verify exited {jc1}/{jc2}");
            ensure!(j1 == j2, "json reports differ between runs");
            Ok(())
        },
    );
}
