//! Canonical partition values and the linear-time verification predicates.
//!
//! A [`Partition`] stores its parts in nondecreasing order together with the
//! cached total. An M-partition of `m` is a partition with the fewest possible
//! parts such that every integer in `0..=m` is the sum of some sub-multiset of
//! the parts; such a partition always has `⌊log₂ m⌋ + 1` parts.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A nondecreasing sequence of positive parts with a cached sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<BigUint>,
    total: BigUint,
}

impl Partition {
    /// Validates `parts` (nonempty, positive, nondecreasing) and caches the sum.
    pub fn new(parts: Vec<BigUint>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyPartition);
        }
        let mut total = BigUint::zero();
        for (index, part) in parts.iter().enumerate() {
            if part.is_zero() {
                return Err(Error::ZeroPart { index });
            }
            if index > 0 && parts[index - 1] > *part {
                return Err(Error::Unsorted {
                    index,
                    prev: parts[index - 1].clone(),
                    next: part.clone(),
                });
            }
            total += part;
        }
        Ok(Self { parts, total })
    }

    pub fn from_u64s(parts: &[u64]) -> Result<Self> {
        Self::new(parts.iter().map(|&p| BigUint::from(p)).collect())
    }

    /// Sorts arbitrary positive parts into canonical order.
    pub fn from_unsorted(mut parts: Vec<BigUint>) -> Result<Self> {
        parts.sort();
        Self::new(parts)
    }

    /// Caller guarantees the invariants; used by generators and enumeration.
    pub(crate) fn from_parts_unchecked(parts: Vec<BigUint>) -> Self {
        debug_assert!(!parts.is_empty());
        debug_assert!(parts.windows(2).all(|w| w[0] <= w[1]));
        let total = parts.iter().sum();
        Self { parts, total }
    }

    pub fn parts(&self) -> &[BigUint] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<BigUint> {
        self.parts
    }

    /// The sum of the parts (`m`).
    pub fn total(&self) -> &BigUint {
        &self.total
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `n` = number of parts minus one.
    pub fn n(&self) -> usize {
        self.parts.len() - 1
    }

    pub fn largest(&self) -> &BigUint {
        self.parts.last().expect("partition is nonempty")
    }

    /// The partition made of the first `len` parts.
    pub fn prefix(&self, len: usize) -> Option<Self> {
        if len == 0 || len > self.parts.len() {
            return None;
        }
        Some(Self::from_parts_unchecked(self.parts[..len].to_vec()))
    }

    /// Appends `r` as a new largest part.
    pub fn appended(&self, r: BigUint) -> Result<Self> {
        let mut parts = self.parts.clone();
        parts.push(r);
        Self::new(parts)
    }

    /// Parts as machine integers, if they all fit.
    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.parts.iter().map(|p| u64::try_from(p).ok()).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{part}")?;
        }
        Ok(())
    }
}

/// `⌊log₂ m⌋` from the exact bit length.
pub fn floor_log2(m: &BigUint) -> Result<u64> {
    if m.is_zero() {
        return Err(Error::NotPositive("m"));
    }
    Ok(m.bits() - 1)
}

/// Number of parts of every M-partition of `m`, `⌊log₂ m⌋ + 1`.
pub fn num_parts(m: &BigUint) -> Result<u64> {
    floor_log2(m).map(|n| n + 1)
}

pub(crate) fn pow2(e: u64) -> BigUint {
    BigUint::one() << e
}

/// `λ₀ = 1` and `λᵢ ≤ 1 + λ₀ + ⋯ + λᵢ₋₁` for every `i`.
///
/// Equivalent to every integer in `0..=total` being a subpartition sum.
pub fn is_weak_m_partition(p: &Partition) -> bool {
    if !p.parts[0].is_one() {
        return false;
    }
    let mut prefix = BigUint::zero();
    for part in &p.parts {
        prefix += 1u32;
        if *part > prefix {
            return false;
        }
        // prefix now holds 1 + previous sum; fold the part in and drop the 1.
        prefix += part;
        prefix -= 1u32;
    }
    true
}

/// The part-count formulation: weak and exactly `⌊log₂ total⌋ + 1` parts.
pub fn is_m_partition(p: &Partition) -> bool {
    is_weak_m_partition(p) && p.len() as u64 == p.total.bits()
}

/// The inequality formulation: weak and `2ⁿ ≤ total` with `n = len − 1`.
///
/// Agrees with [`is_m_partition`] on every input.
pub fn is_m_partition_by_power_bound(p: &Partition) -> bool {
    is_weak_m_partition(p) && pow2(p.n() as u64) <= p.total
}

/// Whether appending `r` to the M-partition `p` yields an M-partition of
/// `total + r`, decided by `λₙ ≤ r`, `r ≤ total + 1` and `2ⁿ⁺¹ ≤ total + r`.
pub fn can_extend(p: &Partition, r: &BigUint) -> Result<bool> {
    if r.is_zero() {
        return Err(Error::NotPositive("r"));
    }
    if !is_m_partition(p) {
        return Err(Error::NotMPartition {
            parts: p.to_string(),
        });
    }
    let total = p.total();
    Ok(p.largest() <= r && *r <= total + 1u32 && pow2(p.n() as u64 + 1) <= total + r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::from_u64s(parts).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn num_parts_examples() {
        assert_eq!(num_parts(&big(1)).unwrap(), 1);
        assert_eq!(num_parts(&big(53)).unwrap(), 6);
        assert_eq!(num_parts(&big(16)).unwrap(), 5);
        assert_eq!(num_parts(&big(15)).unwrap(), 4);
        assert_eq!(num_parts(&big(0)), Err(Error::NotPositive("m")));
    }

    #[test]
    fn num_parts_at_powers_of_two() {
        for e in 0..200u64 {
            let m = pow2(e);
            assert_eq!(num_parts(&m).unwrap(), e + 1);
            if e > 0 {
                assert_eq!(num_parts(&(m - 1u32)).unwrap(), e);
            }
        }
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(Partition::from_u64s(&[]), Err(Error::EmptyPartition));
        assert_eq!(
            Partition::from_u64s(&[1, 0, 2]),
            Err(Error::ZeroPart { index: 1 })
        );
        assert!(matches!(
            Partition::from_u64s(&[3, 1]),
            Err(Error::Unsorted { index: 1, .. })
        ));
        let q = Partition::from_unsorted(vec![big(3), big(1)]).unwrap();
        assert_eq!(q.to_u64s().unwrap(), vec![1, 3]);
        assert_eq!(q.total(), &big(4));
    }

    #[test]
    fn weak_examples() {
        assert!(is_weak_m_partition(&p(&[1, 2, 4])));
        assert!(!is_weak_m_partition(&p(&[1, 2, 4, 8, 19, 19])));
        assert!(!is_weak_m_partition(&p(&[2, 3])));
        assert!(is_weak_m_partition(&p(&[1])));
        assert!(is_weak_m_partition(&p(&[1, 1, 1, 1])));
    }

    #[test]
    fn m_partition_examples() {
        assert!(is_m_partition(&p(&[1, 2, 4, 8, 16, 22])));
        assert!(is_m_partition(&p(&[1, 1, 2, 4])));
        assert!(!is_m_partition(&p(&[1, 1, 1, 5])));
        // weak but one part too many
        assert!(!is_m_partition(&p(&[1, 1, 1, 1])));
        assert!(!is_m_partition_by_power_bound(&p(&[1, 1, 1, 1])));
    }

    #[test]
    fn display_joins_with_plus() {
        assert_eq!(p(&[1, 2, 3, 7, 13, 27]).to_string(), "1+2+3+7+13+27");
        assert_eq!(p(&[1]).to_string(), "1");
    }

    #[test]
    fn can_extend_examples() {
        assert!(can_extend(&p(&[1, 2, 4, 5]), &big(13)).unwrap());
        assert!(!can_extend(&p(&[1, 1, 3, 6]), &big(5)).unwrap());
        assert!(!can_extend(&p(&[1]), &big(3)).unwrap());
        assert!(can_extend(&p(&[1]), &big(1)).unwrap());
        assert!(matches!(
            can_extend(&p(&[1, 1, 1, 5]), &big(5)),
            Err(Error::NotMPartition { .. })
        ));
        assert_eq!(can_extend(&p(&[1]), &big(0)), Err(Error::NotPositive("r")));
    }

    #[test]
    fn huge_parts_do_not_wrap() {
        let mut parts: Vec<BigUint> = (0..100u64).map(pow2).collect();
        parts.push(pow2(100));
        let q = Partition::new(parts).unwrap();
        assert!(is_m_partition(&q));
        assert_eq!(q.total(), &(pow2(101) - 1u32));
    }
}
