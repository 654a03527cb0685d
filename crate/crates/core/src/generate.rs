//! The three witness constructions.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{floor_log2, pow2, Partition};

/// Powers `1, 2, …, 2ⁿ⁻¹` plus the remainder `m − (2ⁿ − 1)`, sorted.
pub fn generate_alg1(m: &BigUint) -> Result<Partition> {
    let n = floor_log2(m)?;
    let mut parts: Vec<BigUint> = (0..n).map(pow2).collect();
    let rest = m + 1u32 - pow2(n);
    // the remainder lies in [1, 2ⁿ]; every power of two below it stays in front
    let at = parts.partition_point(|p| *p <= rest);
    parts.insert(at, rest);
    Ok(Partition::from_parts_unchecked(parts))
}

/// Repeated halving: the largest part is `⌈m/2⌉`, then `⌈r/2⌉` of what
/// remains, down to a final part of 1.
pub fn generate_alg2(m: &BigUint) -> Result<Partition> {
    if m.is_zero() {
        return Err(Error::NotPositive("m"));
    }
    let mut parts = Vec::with_capacity(m.bits() as usize);
    let mut rest = m.clone();
    while !rest.is_one() {
        let (half, odd) = rest.div_rem(&BigUint::from(2u32));
        parts.push(&half + odd);
        rest = half;
    }
    parts.push(BigUint::one());
    parts.reverse();
    Ok(Partition::from_parts_unchecked(parts))
}

/// The window `[2ⁿ, 2ⁿ + 2ⁿ⁻¹ − 2]` in which [`generate_alg3`] applies.
pub fn alg3_window(n: u64) -> Option<(BigUint, BigUint)> {
    if n < 2 {
        return None;
    }
    Some((pow2(n), pow2(n) + pow2(n - 1) - 2u32))
}

/// Powers `1, …, 2ⁿ⁻²` and the two halves of `m − (2ⁿ⁻¹ − 1)`.
///
/// Only defined for `2ⁿ ≤ m ≤ 2ⁿ + 2ⁿ⁻¹ − 2` with `n ≥ 2`.
pub fn generate_alg3(m: &BigUint) -> Result<Partition> {
    let n = floor_log2(m)?;
    let Some((lo, hi)) = alg3_window(n) else {
        return Err(Error::Domain(format!(
            "algorithm 3 needs at least three parts (m >= 4), got m = {m}"
        )));
    };
    if *m > hi {
        return Err(Error::OutOfWindow {
            what: "algorithm 3",
            value: m.clone(),
            lo,
            hi,
        });
    }
    let mut parts: Vec<BigUint> = (0..=n - 2).map(pow2).collect();
    let rest = m + 1u32 - pow2(n - 1);
    let (half, odd) = rest.div_rem(&BigUint::from(2u32));
    parts.push(half.clone());
    parts.push(half + odd);
    Ok(Partition::from_parts_unchecked(parts))
}

/// One of the three generators by number.
pub fn generate(m: &BigUint, algorithm: u8) -> Result<Partition> {
    match algorithm {
        1 => generate_alg1(m),
        2 => generate_alg2(m),
        3 => generate_alg3(m),
        other => Err(Error::Domain(format!(
            "unknown algorithm {other}; expected 1, 2 or 3"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::is_m_partition;

    fn parts(p: Result<Partition>) -> Vec<u64> {
        p.unwrap().to_u64s().unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn alg1_examples() {
        assert_eq!(parts(generate_alg1(&big(53))), [1, 2, 4, 8, 16, 22]);
        assert_eq!(parts(generate_alg1(&big(7))), [1, 2, 4]);
        assert_eq!(parts(generate_alg1(&big(33))), [1, 2, 2, 4, 8, 16]);
        assert_eq!(parts(generate_alg1(&big(1))), [1]);
        assert_eq!(generate_alg1(&big(0)), Err(Error::NotPositive("m")));
    }

    #[test]
    fn alg2_examples() {
        assert_eq!(parts(generate_alg2(&big(53))), [1, 2, 3, 7, 13, 27]);
        assert_eq!(parts(generate_alg2(&big(1))), [1]);
        assert_eq!(parts(generate_alg2(&big(16))), [1, 1, 2, 4, 8]);
        assert_eq!(generate_alg2(&big(0)), Err(Error::NotPositive("m")));
    }

    #[test]
    fn alg3_examples() {
        assert_eq!(parts(generate_alg3(&big(8))), [1, 2, 2, 3]);
        assert_eq!(parts(generate_alg3(&big(9))), [1, 2, 3, 3]);
        assert_eq!(parts(generate_alg3(&big(4))), [1, 1, 2]);
        match generate_alg3(&big(53)) {
            Err(Error::OutOfWindow { lo, hi, .. }) => {
                assert_eq!((lo, hi), (big(32), big(46)));
            }
            other => panic!("expected window error, got {other:?}"),
        }
        for m in 1..4 {
            assert!(matches!(generate_alg3(&big(m)), Err(Error::Domain(_))));
        }
    }

    #[test]
    fn alg3_formula_outside_window_fails_verification() {
        // the literal construction at m = 53 yields 1+2+4+8+19+19, which misses 16
        let forced = Partition::from_u64s(&[1, 2, 4, 8, 19, 19]).unwrap();
        assert_eq!(forced.total(), &big(53));
        assert!(!is_m_partition(&forced));
    }

    #[test]
    fn generators_work_far_beyond_u64() {
        let m = pow2(300) + pow2(299) - 5u32;
        for alg in 1..=3 {
            let p = generate(&m, alg).unwrap();
            assert_eq!(p.total(), &m);
            assert!(is_m_partition(&p), "alg {alg}");
        }
        assert!(generate(&m, 4).is_err());
    }
}
