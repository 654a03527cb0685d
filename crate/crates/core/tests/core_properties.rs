use mpart::bounds::{largest_part_bounds, PartBounds};
use mpart::enumeration::{enumerate, oracle_is_weak, subset_sums, EnumerationCursor};
use mpart::generate::{alg3_window, generate_alg1, generate_alg2, generate_alg3};
use mpart::partition::{
    can_extend, is_m_partition, is_m_partition_by_power_bound, is_weak_m_partition, num_parts,
    Partition,
};
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seed for the random part-list comparison; changing it changes the sample.
const RANDOM_LIST_SEED: u64 = 0x4d50_6172_7469_7469;

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn bounds(m: u64) -> PartBounds {
    largest_part_bounds(&big(m)).unwrap()
}

#[test]
fn alg1_and_alg2_always_yield_m_partitions() {
    for m in 1..=2048u64 {
        for p in [
            generate_alg1(&big(m)).unwrap(),
            generate_alg2(&big(m)).unwrap(),
        ] {
            assert_eq!(p.total(), &big(m));
            assert!(is_m_partition(&p), "m = {m}: {p}");
        }
    }
}

#[test]
fn alg3_yields_m_partitions_in_window() {
    let mut covered = 0;
    for m in 4..=2048u64 {
        let n = 63 - m.leading_zeros() as u64;
        let (lo, hi) = alg3_window(n).unwrap();
        let inside = lo <= big(m) && big(m) <= hi;
        match generate_alg3(&big(m)) {
            Ok(p) => {
                assert!(inside, "m = {m} accepted outside window");
                assert_eq!(p.total(), &big(m));
                assert!(is_m_partition(&p), "m = {m}: {p}");
                covered += 1;
            }
            Err(_) => assert!(!inside, "m = {m} rejected inside window"),
        }
    }
    assert!(covered > 900);
}

#[test]
fn part_count_matches_log2() {
    for m in 1..=512u64 {
        let expected = num_parts(&big(m)).unwrap() as usize;
        let mut cursor = EnumerationCursor::new(m).unwrap();
        while let Some(parts) = cursor.advance() {
            assert_eq!(parts.len(), expected, "m = {m}");
        }
    }
}

#[test]
fn prefixes_of_m_partitions_are_m_partitions() {
    for m in 1..=300u64 {
        for p in enumerate(m).unwrap() {
            for len in 1..=p.len() {
                let prefix = p.prefix(len).unwrap();
                assert!(is_m_partition(&prefix), "prefix {prefix} of {p}");
            }
        }
    }
}

#[test]
fn largest_part_within_bounds() {
    for m in 2..=512u64 {
        let b = bounds(m);
        let mut cursor = EnumerationCursor::new(m).unwrap();
        while let Some(parts) = cursor.advance() {
            let largest = big(*parts.last().unwrap());
            assert!(b.contains(&largest), "m = {m}: {parts:?}");
        }
    }
}

#[test]
fn largest_part_bounds_are_sharp() {
    for m in 2..=2048u64 {
        let b = bounds(m);
        let n = 63 - m.leading_zeros();
        let by_one = big(m + 1 - (1 << n));

        assert_eq!(
            generate_alg2(&big(m)).unwrap().largest(),
            &b.upper,
            "m = {m}"
        );

        if by_one >= b.lower {
            assert_eq!(
                generate_alg1(&big(m)).unwrap().largest(),
                &b.lower,
                "m = {m}"
            );
        }
        if let Ok(p) = generate_alg3(&big(m)) {
            assert_eq!(p.largest(), &b.lower, "m = {m}");
        }
        // the two constructions cover the lower bound for every m
        let attained = generate_alg1(&big(m)).unwrap().largest() == &b.lower
            || generate_alg3(&big(m)).is_ok_and(|p| p.largest() == &b.lower);
        assert!(attained, "lower bound not attained for m = {m}");
    }
}

#[test]
fn bounds_match_enumerated_extremes() {
    for m in 2..=256u64 {
        let all = enumerate(m).unwrap();
        let min = all.iter().map(|p| p.largest().clone()).min().unwrap();
        let max = all.iter().map(|p| p.largest().clone()).max().unwrap();
        let b = bounds(m);
        assert_eq!((min, max), (b.lower, b.upper), "m = {m}");
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b) + i64::from(a.rem_euclid(b) != 0)
}

#[test]
fn two_lower_bounds_dominate_the_whole_family() {
    // λₙ ≥ ⌈(m − 2^{n−i+1} + 1)/i⌉ for each 1 ≤ i ≤ n; the cases i = 1, 2 suffice
    for m in 2..=4096i64 {
        let n = 63 - m.leading_zeros() as i64;
        let general = |i: i64| ceil_div(m - (1 << (n - i + 1)) + 1, i);
        let lower = i64::try_from(&bounds(m as u64).lower).unwrap();
        assert_eq!(lower, general(1).max(general(2)), "m = {m}");
        for i in 1..=n {
            assert!(general(i) <= lower, "m = {m}, i = {i}");
        }
    }
}

#[test]
fn can_extend_agrees_with_full_check() {
    for m in 1..=256u64 {
        for p in enumerate(m).unwrap() {
            let top = u64::try_from(p.largest()).unwrap();
            for r in top..=m + 1 {
                let fast = can_extend(&p, &big(r)).unwrap();
                let slow = is_m_partition(&p.appended(big(r)).unwrap());
                assert_eq!(fast, slow, "{p} + {r}");
            }
        }
    }
}

#[test]
fn weak_check_agrees_with_oracle_on_enumerated() {
    for m in 1..=256u64 {
        for p in enumerate(m).unwrap() {
            assert!(is_weak_m_partition(&p));
            assert!(oracle_is_weak(&p).unwrap(), "{p}");
        }
    }
}

#[test]
fn weak_check_agrees_with_oracle_on_random_lists() {
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_LIST_SEED);
    let mut weak_seen = 0;
    for _ in 0..10_000 {
        let len = rng.gen_range(1..=12);
        // bias toward small parts so weak lists are well represented
        let cap = if rng.gen_bool(0.5) { 8 } else { 64 };
        let mut parts: Vec<u64> = (0..len).map(|_| rng.gen_range(1..=cap)).collect();
        if rng.gen_bool(0.5) {
            parts[0] = 1;
        }
        parts.sort_unstable();
        let p = Partition::from_u64s(&parts).unwrap();
        let fast = is_weak_m_partition(&p);
        assert_eq!(fast, oracle_is_weak(&p).unwrap(), "{p}");
        weak_seen += usize::from(fast);
    }
    assert!(weak_seen > 1000, "sample should exercise both outcomes");
}

#[test]
fn derived_counterexample_needs_sum_four() {
    let p = Partition::from_u64s(&[1, 1, 1, 5]).unwrap();
    assert!(!is_m_partition(&p));
    let sums = subset_sums(&p).unwrap();
    assert_eq!(sums.first_gap(), Some(4));
}

proptest! {
    #[test]
    fn count_and_power_formulations_agree(mut parts in prop::collection::vec(1u64..40, 1..10)) {
        parts.sort_unstable();
        let p = Partition::from_u64s(&parts).unwrap();
        prop_assert_eq!(is_m_partition(&p), is_m_partition_by_power_bound(&p));
    }

    #[test]
    fn alg2_is_m_partition_for_large_m(m in 1u64..u64::MAX) {
        let p = generate_alg2(&big(m)).unwrap();
        prop_assert_eq!(p.total(), &big(m));
        prop_assert!(is_m_partition(&p));
        prop_assert_eq!(p.largest(), &bounds(m.max(2)).upper.min(big(m)));
    }

    #[test]
    fn alg1_is_m_partition_for_large_m(m in 1u64..u64::MAX) {
        let p = generate_alg1(&big(m)).unwrap();
        prop_assert!(is_m_partition(&p));
        prop_assert_eq!(p.len() as u64, num_parts(&big(m)).unwrap());
    }
}
