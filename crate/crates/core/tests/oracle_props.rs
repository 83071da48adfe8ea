//! Property tests pitting the two determinant oracles against each other.

use circdet_core::{crosscheck, det_bareiss, det_spectral, CirculantMatrix, Mat, Rat};
use num_traits::One;
use proptest::prelude::*;

fn row_strategy() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-9i64..=9, 1..=24)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The elimination and the eigenvalue-product routes agree at 128 bits
    /// and relative tolerance 1e-9, including exactly singular draws.
    #[test]
    fn oracles_agree_on_random_circulants(row in row_strategy()) {
        let c = CirculantMatrix::from_ints(&row).unwrap();
        let exact = det_bareiss(&c.materialize());
        let est = det_spectral(&c, 128).unwrap();
        let cc = crosscheck(&exact, &est, 1e-9);
        prop_assert!(cc.pass, "exact {} vs spectral {}", exact, est.value.re.decimal(24));
    }

    /// Integer input keeps Bareiss elimination integral all the way through.
    #[test]
    fn integer_inputs_give_integer_determinants(row in row_strategy()) {
        let c = CirculantMatrix::from_ints(&row).unwrap();
        let det = det_bareiss(&c.materialize());
        prop_assert!(det.denom().is_one(), "non-integral determinant {det}");
    }

    /// Swapping two distinct rows negates the determinant.
    #[test]
    fn row_swap_negates(row in proptest::collection::vec(-9i64..=9, 2..=10), a in 0usize..10, b in 0usize..10) {
        let c = CirculantMatrix::from_ints(&row).unwrap();
        let n = c.order();
        let (a, b) = (a % n + 1, b % n + 1);
        prop_assume!(a != b);
        let mut m = c.materialize();
        let before = det_bareiss(&m);
        m.swap_rows(a, b);
        prop_assert_eq!(det_bareiss(&m), -before);
    }

    /// The wrap rule and the entry rule describe the same matrix, every row
    /// is the previous one rotated right, and the trace is n * a_1.
    #[test]
    fn circulant_structure(row in row_strategy()) {
        let c = CirculantMatrix::from_ints(&row).unwrap();
        let n = c.order();
        let dense = c.materialize();
        for i in 1..=n {
            for j in 1..=n {
                let wrapped = circdet_core::wrapped_term(c.row(), j as i64 - i as i64 + 1);
                prop_assert_eq!(wrapped, c.entry(i, j).unwrap());
            }
        }
        for i in 1..n {
            for j in 1..=n {
                let rotated = if j == 1 { dense.at(i, n) } else { dense.at(i, j - 1) };
                prop_assert_eq!(dense.at(i + 1, j), rotated);
            }
        }
        prop_assert_eq!(dense.trace(), Rat::int(n as i64) * &c.row()[0]);
    }
}

#[test]
fn identity_determinants_are_one() {
    for n in 1..=8 {
        assert_eq!(det_bareiss(&Mat::identity(n)), Rat::one());
    }
}
