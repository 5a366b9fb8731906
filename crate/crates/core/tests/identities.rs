//! Cross-engine identities: the independent oracle against the DP engines,
//! the pentagonal recurrence against the coin-change DP, the convolution
//! split, and the log engine against the exact engine.

use proptest::prelude::*;

use partlab_core::count::{
    brute_force_count, count_exact_parts, count_parts_leq, count_restricted,
    count_restricted_table, partition_table, Count,
};
use partlab_core::logdomain::{log_count_restricted, LogMag};
use partlab_core::PartSet;

/// One DP run over [1, 2000] yields p(m) for every m <= 2000 (parts larger
/// than m never occur), cross-checking the pentagonal recurrence wholesale.
#[test]
fn pentagonal_agrees_with_coin_change_dp() {
    let n = 2000u64;
    let pent = partition_table(n);
    let dp = count_restricted_table(&PartSet::range(1, n).unwrap(), n);
    assert_eq!(pent, dp);
}

#[test]
fn convolution_split_exact() {
    // p_A(m) = sum_k p_{A1}(k) * p_{A2}(m-k) for A1 = A ∩ [1,t], A2 = A ∩ [t+1, ..)
    let a: PartSet = "1,3-5,9,12-20".parse().unwrap();
    let m = 200u64;
    let full = count_restricted_table(&a, m);
    for t in [0u64, 1, 4, 9, 11, 20, 200] {
        let a1 = a.intersect_range(1, t);
        let a2 = a.intersect_range(t + 1, m);
        let t1 = count_restricted_table(&a1, m);
        let t2 = count_restricted_table(&a2, m);
        for m_probe in [0usize, 1, 17, 100, 200] {
            let mut sum = Count::zero();
            for k in 0..=m_probe {
                sum += &(&t1[k] * &t2[m_probe - k]);
            }
            assert_eq!(sum, full[m_probe], "t={t} m={m_probe}");
        }
    }
}

#[test]
fn shift_identity_and_parts_leq_agree() {
    for k in 1..=12u64 {
        for n in 0..=60u64 {
            assert_eq!(
                count_parts_leq(k, n),
                count_exact_parts(n + k, k),
                "k={k} n={n}"
            );
        }
    }
}

fn arb_set(max_elem: u64) -> impl Strategy<Value = PartSet> {
    prop::collection::btree_set(1..=max_elem, 0..=max_elem as usize)
        .prop_map(|s| PartSet::from_elements(s).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn oracle_equivalence(a in arb_set(12), n in 0u64..=18) {
        let dp = count_restricted(&a, n);
        let oracle = brute_force_count(&a, n).unwrap();
        prop_assert_eq!(dp, oracle);
    }

    #[test]
    fn prefix_locality(a in arb_set(20), n in 0u64..=24) {
        let local = a.intersect_range(1, n);
        prop_assert_eq!(count_restricted(&a, n), count_restricted(&local, n));
    }

    #[test]
    fn monotone_when_one_present(a in arb_set(15), n in 1u64..=40) {
        let with_one = a.union(&PartSet::singleton(1).unwrap());
        let table = count_restricted_table(&with_one, n);
        for m in 1..=n as usize {
            prop_assert!(table[m] >= table[m - 1], "m={}", m);
        }
    }

    #[test]
    fn log_engine_tracks_exact_engine(a in arb_set(18), n in 0u64..=200) {
        let exact = count_restricted(&a, n);
        let log = log_count_restricted(&a, n);
        match (exact.is_zero(), log) {
            (true, LogMag::Zero) => {}
            (false, LogMag::Finite(v)) => {
                let want = exact.ln().value_or_neg_inf();
                prop_assert!((v - want).abs() <= 1e-6 * want.max(1.0),
                    "n={} got={} want={}", n, v, want);
            }
            (e, l) => prop_assert!(false, "sentinel mismatch exact_zero={} log={:?}", e, l),
        }
    }

    #[test]
    fn convolution_split_random(a in arb_set(25), t in 0u64..=25, m in 0u64..=80) {
        let full = count_restricted(&a, m);
        let t1 = count_restricted_table(&a.intersect_range(1, t), m);
        let t2 = count_restricted_table(&a.intersect_range(t + 1, m.max(1)), m);
        let mut sum = Count::zero();
        for k in 0..=m as usize {
            sum += &(&t1[k] * &t2[m as usize - k]);
        }
        prop_assert_eq!(sum, full);
    }
}
