//! Sharp bounds on the largest part and on the truncation sums `m⁽¹⁾`, `m⁽¹²⁾`.
//!
//! Dropping the largest part of an M-partition of `m` leaves an M-partition of
//! some `m⁽¹⁾`; dropping the next one leaves an M-partition of `m⁽¹²⁾`. The
//! ranges below are the admissible values of those truncation sums as they
//! appear in the counting recurrence.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::partition::{floor_log2, pow2};

/// Bounds `lower ≤ λₙ ≤ upper` on the largest part of any M-partition of `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartBounds {
    pub lower: BigUint,
    pub upper: BigUint,
}

impl PartBounds {
    pub fn contains(&self, part: &BigUint) -> bool {
        self.lower <= *part && *part <= self.upper
    }
}

/// A closed integer interval `[lo, hi]`; empty when `hi < lo`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionRange {
    pub lo: BigInt,
    pub hi: BigInt,
}

impl ExtensionRange {
    pub fn new(lo: impl Into<BigInt>, hi: impl Into<BigInt>) -> Self {
        Self {
            lo: lo.into(),
            hi: hi.into(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.hi < self.lo
    }

    pub fn contains(&self, v: &BigInt) -> bool {
        self.lo <= *v && *v <= self.hi
    }

    /// Number of integers in the range.
    pub fn len(&self) -> BigUint {
        if self.is_empty() {
            BigUint::default()
        } else {
            (&self.hi - &self.lo + 1u32)
                .to_biguint()
                .expect("nonempty range has positive length")
        }
    }

    /// `(lo, hi)` as machine integers, or `None` if empty or out of range.
    pub fn as_usize(&self) -> Option<(usize, usize)> {
        if self.is_empty() {
            return None;
        }
        Some((self.lo.to_usize()?, self.hi.to_usize()?))
    }
}

fn require_at_least_two(m: &BigUint, what: &str) -> Result<u64> {
    if *m < BigUint::from(2u32) {
        return Err(Error::Domain(format!("{what} requires m >= 2, got {m}")));
    }
    floor_log2(m)
}

/// `max{m − 2ⁿ + 1, ⌈(m − 2ⁿ⁻¹ + 1)/2⌉} ≤ λₙ ≤ ⌈m/2⌉` for `m ≥ 2`.
pub fn largest_part_bounds(m: &BigUint) -> Result<PartBounds> {
    let n = require_at_least_two(m, "largest_part_bounds")?;
    let by_one = m + 1u32 - pow2(n);
    let by_two = (m + 1u32 - pow2(n - 1)).div_ceil(&BigUint::from(2u32));
    Ok(PartBounds {
        lower: by_one.max(by_two),
        upper: m.div_ceil(&BigUint::from(2u32)),
    })
}

/// Admissible `m⁽¹⁾`: `⌊m/2⌋ ≤ m⁽¹⁾ ≤ min{⌊(m + 2ⁿ⁻¹ − 1)/2⌋, 2ⁿ − 1}`.
pub fn extension_range_m1(m: &BigUint) -> Result<ExtensionRange> {
    let n = require_at_least_two(m, "extension_range_m1")?;
    let lo = m >> 1u32;
    let hi = ((m + pow2(n - 1) - 1u32) >> 1u32).min(pow2(n) - 1u32);
    Ok(ExtensionRange::new(lo, hi))
}

/// The subtraction range of the counting recurrence for a given `m⁽¹⁾`:
/// `⌊m⁽¹⁾/2⌋ ≤ m⁽¹²⁾ ≤ 2m⁽¹⁾ − m − 1`, frequently empty.
pub fn extension_range_m12(m1: &BigUint, m: &BigUint) -> Result<ExtensionRange> {
    let outer = extension_range_m1(m)?;
    let m1_signed = BigInt::from(m1.clone());
    if !outer.contains(&m1_signed) {
        return Err(Error::OutOfWindow {
            what: "m1 for extension_range_m12",
            value: m1.clone(),
            lo: outer.lo.to_biguint().unwrap_or_default(),
            hi: outer.hi.to_biguint().unwrap_or_default(),
        });
    }
    let lo = BigInt::from(m1 >> 1u32);
    let hi = 2 * m1_signed - BigInt::from(m.clone()) - 1;
    Ok(ExtensionRange::new(lo, hi))
}
