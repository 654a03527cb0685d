//! Exhaustive enumeration of `Mp(m)` and the brute-force subset-sum oracle.
//!
//! The enumerator walks the lattice points of the polytope cut out by
//! `λ₀ = 1`, `λᵢ₋₁ ≤ λᵢ ≤ 1 + λ₀ + ⋯ + λᵢ₋₁` and `Σλᵢ = m` with exactly
//! `⌊log₂ m⌋ + 1` coordinates. At each depth the admissible values for the
//! next part are narrowed so the remaining positions can still land on `m`:
//!
//! * at most: the rest must each be at least as large, `v·(r + 1) ≤ m − s`;
//! * at least: the rest doubling as fast as allowed must reach the residue,
//!   which works out to `v ≥ ⌈(m + 1)/2ʳ⌉ − (s + 1)`;
//!
//! where `s` is the prefix sum and `r` the number of positions after this one.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Largest total the dense subset-sum oracle will allocate for.
pub const ORACLE_LIMIT: usize = 1 << 28;

/// All subset sums of a part multiset, as a dense bitset over `0..=total`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumReachability {
    total: usize,
    words: Vec<u64>,
}

impl SumReachability {
    fn singleton_zero(total: usize) -> Self {
        let mut words = vec![0u64; total / 64 + 1];
        words[0] = 1;
        Self { total, words }
    }

    /// `reach |= reach << shift`, truncated to the universe.
    fn add_part(&mut self, shift: usize) {
        let word_shift = shift / 64;
        let bit_shift = shift % 64;
        for i in (word_shift..self.words.len()).rev() {
            let src = i - word_shift;
            let mut v = self.words[src] << bit_shift;
            if bit_shift > 0 && src > 0 {
                v |= self.words[src - 1] >> (64 - bit_shift);
            }
            self.words[i] |= v;
        }
        let tail = (self.total + 1) % 64;
        if tail != 0 {
            *self.words.last_mut().unwrap() &= (1u64 << tail) - 1;
        }
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn contains(&self, s: usize) -> bool {
        s <= self.total && self.words[s / 64] >> (s % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Whether every value in `0..=total` is reachable.
    pub fn is_full(&self) -> bool {
        self.count() == self.total + 1
    }

    /// Smallest unreachable value, if any.
    pub fn first_gap(&self) -> Option<usize> {
        (0..=self.total).find(|&s| !self.contains(s))
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..=self.total).filter(|&s| self.contains(s))
    }

    /// `s` reachable iff `total − s` reachable.
    pub fn is_complement_closed(&self) -> bool {
        (0..=self.total).all(|s| self.contains(s) == self.contains(self.total - s))
    }
}

/// Exact subset sums of the parts by bitset dynamic programming.
pub fn subset_sums(p: &Partition) -> Result<SumReachability> {
    let total = usize::try_from(p.total())
        .ok()
        .filter(|&t| t <= ORACLE_LIMIT)
        .ok_or_else(|| {
            Error::Domain(format!(
                "subset-sum oracle is limited to totals up to {ORACLE_LIMIT}, got {}",
                p.total()
            ))
        })?;
    let mut reach = SumReachability::singleton_zero(total);
    for part in p.parts() {
        // every part is at most the total, which fits
        reach.add_part(usize::try_from(part).expect("part fits"));
    }
    debug_assert!(reach.contains(0) && reach.contains(total));
    Ok(reach)
}

/// Ground truth for the weak property: every `0..=total` is a subset sum.
pub fn oracle_is_weak(p: &Partition) -> Result<bool> {
    Ok(subset_sums(p)?.is_full())
}

/// Ground truth for the M-partition property: weak by the oracle, with the
/// minimal part count.
pub fn oracle_is_m_partition(p: &Partition) -> Result<bool> {
    Ok(p.len() as u64 == p.total().bits() && oracle_is_weak(p)?)
}

/// Deterministic lexicographic stream of `Mp(m)`.
///
/// [`EnumerationCursor::advance`] lends each partition as a slice without
/// allocating; the [`Iterator`] impl yields owned [`Partition`]s.
#[derive(Debug, Clone)]
pub struct EnumerationCursor {
    target: u64,
    parts: Vec<u64>,
    /// `prefix[i]` is the sum of `parts[..i]`.
    prefix: Vec<u64>,
    upper: Vec<u64>,
    started: bool,
    done: bool,
}

impl EnumerationCursor {
    pub fn new(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::NotPositive("m"));
        }
        let len = (64 - m.leading_zeros()) as usize;
        Ok(Self {
            target: m,
            parts: vec![0; len],
            prefix: vec![0; len + 1],
            upper: vec![0; len],
            started: false,
            done: false,
        })
    }

    pub fn target(&self) -> u64 {
        self.target
    }

    /// Admissible `[lo, hi]` for position `i` given the parts before it.
    fn bounds_at(&self, i: usize) -> (u64, u64) {
        let m = self.target;
        let s = self.prefix[i];
        let prev = if i == 0 { 1 } else { self.parts[i - 1] };
        let after = (self.parts.len() - 1 - i) as u32;
        let residue = m - s;
        let reach_lo = match 1u128.checked_shl(after) {
            Some(pow) => (m as u128 + 1).div_ceil(pow).saturating_sub(s as u128 + 1),
            None => 0,
        };
        let lo = u64::try_from(reach_lo).unwrap_or(u64::MAX).max(prev);
        let hi = (s + 1).min(residue / (after as u64 + 1));
        (lo, hi)
    }

    /// Fills positions `from..` with their smallest admissible values.
    /// Returns the first position with an empty range on failure.
    fn fill(&mut self, from: usize) -> std::result::Result<(), usize> {
        for i in from..self.parts.len() {
            let (lo, hi) = self.bounds_at(i);
            if lo > hi {
                return Err(i);
            }
            self.parts[i] = lo;
            self.upper[i] = hi;
            self.prefix[i + 1] = self.prefix[i] + lo;
        }
        Ok(())
    }

    /// Moves to the next admissible value at the deepest position below
    /// `limit` that still has room; returns the position after it.
    fn bump(&mut self, limit: usize) -> Option<usize> {
        for j in (0..limit).rev() {
            if self.parts[j] < self.upper[j] {
                self.parts[j] += 1;
                self.prefix[j + 1] += 1;
                return Some(j + 1);
            }
        }
        None
    }

    /// The next partition in lexicographic order, lent as a slice.
    pub fn advance(&mut self) -> Option<&[u64]> {
        if self.done {
            return None;
        }
        let mut from = if self.started {
            match self.bump(self.parts.len()) {
                Some(j) => j,
                None => {
                    self.done = true;
                    return None;
                }
            }
        } else {
            self.started = true;
            0
        };
        loop {
            match self.fill(from) {
                Ok(()) => {
                    debug_assert_eq!(self.prefix[self.parts.len()], self.target);
                    return Some(&self.parts);
                }
                Err(stuck) => match self.bump(stuck) {
                    Some(j) => from = j,
                    None => {
                        self.done = true;
                        return None;
                    }
                },
            }
        }
    }

    /// Drains the cursor, counting without materializing partitions.
    pub fn count_remaining(&mut self) -> u64 {
        let mut count = 0;
        while self.advance().is_some() {
            count += 1;
        }
        count
    }
}

impl Iterator for EnumerationCursor {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        self.advance()
            .map(|parts| Partition::from_parts_unchecked(parts.iter().map(|&p| p.into()).collect()))
    }
}

/// `Mp(m)` in lexicographic order.
pub fn enumerate(m: u64) -> Result<Vec<Partition>> {
    Ok(EnumerationCursor::new(m)?.collect())
}

/// `|Mp(m)|` by streaming the enumeration.
pub fn count_by_enumeration(m: u64) -> Result<BigUint> {
    Ok(EnumerationCursor::new(m)?.count_remaining().into())
}
