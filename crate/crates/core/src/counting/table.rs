use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::{is_upper_half, level, upper_half_window};
use crate::bounds::{extension_range_m1, extension_range_m12, ExtensionRange};
use crate::error::{Error, Result};

/// Memoized `a_m` for `1 ≤ m ≤ max_m`, grown bottom-up.
///
/// Alongside the counts the table keeps three running sums so that each new
/// entry costs a constant number of big-integer additions:
///
/// * `prefix[k] = a_1 + ⋯ + a_k`
/// * `strided[k] = prefix[k] + prefix[k−2] + prefix[k−4] + ⋯`
/// * `cumulative[k] = prefix[0] + ⋯ + prefix[k]`
///
/// Entries are append-only; extending never touches an existing value.
#[derive(Debug, Clone)]
pub struct CountTable {
    counts: Vec<BigUint>,
    prefix: Vec<BigUint>,
    strided: Vec<BigUint>,
    cumulative: Vec<BigUint>,
}

impl Default for CountTable {
    fn default() -> Self {
        Self::new()
    }
}

impl CountTable {
    /// A table holding only the base case `a_1 = 1`.
    pub fn new() -> Self {
        let zero = BigUint::zero;
        let one = BigUint::one;
        Self {
            counts: vec![zero(), one()],
            prefix: vec![zero(), one()],
            strided: vec![zero(), one()],
            cumulative: vec![zero(), one()],
        }
    }

    /// Largest `m` with a stored count.
    pub fn max_m(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn get(&self, m: usize) -> Option<&BigUint> {
        if m == 0 {
            None
        } else {
            self.counts.get(m)
        }
    }

    /// `(m, a_m)` for every stored `m`, ascending.
    pub fn rows(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.counts.iter().enumerate().skip(1)
    }

    /// `a_lo + ⋯ + a_hi`, zero when `hi < lo`.
    pub fn range_sum(&self, lo: usize, hi: usize) -> BigUint {
        if hi < lo {
            return BigUint::zero();
        }
        &self.prefix[hi] - &self.prefix[lo.max(1) - 1]
    }

    fn prefix_at(&self, k: i64) -> &BigUint {
        static ZERO: BigUint = BigUint::ZERO;
        if k < 0 {
            &ZERO
        } else {
            &self.prefix[k as usize]
        }
    }

    fn strided_at(&self, k: i64) -> &BigUint {
        static ZERO: BigUint = BigUint::ZERO;
        if k < 0 {
            &ZERO
        } else {
            &self.strided[k as usize]
        }
    }

    fn cumulative_at(&self, k: i64) -> &BigUint {
        static ZERO: BigUint = BigUint::ZERO;
        if k < 0 {
            &ZERO
        } else {
            &self.cumulative[k as usize]
        }
    }

    /// `Σ_{t=0}^{upto} prefix[⌊t/2⌋ − 1]`.
    fn halved_prefix_sum(&self, upto: i64) -> BigInt {
        if upto < 0 {
            return BigInt::zero();
        }
        let q = upto / 2;
        let twice = BigInt::from(self.cumulative_at(q - 1).clone()) * 2;
        if upto % 2 == 1 {
            twice
        } else {
            twice - BigInt::from(self.prefix_at(q - 1).clone())
        }
    }

    /// Evaluates the recurrence for `m = max_m + 1` from the running sums.
    fn next_count(&self) -> BigUint {
        let m = self.counts.len();
        let n = level(m);
        let mi = m as i64;
        let lo = m / 2;
        let hi = ((m + (1 << (n - 1)) - 1) / 2).min((1 << n) - 1);

        let mut total = BigInt::from(self.range_sum(lo, hi));

        // the inner range ⌊m1/2⌋ ..= 2·m1 − m − 1 is nonempty iff 3·m1 > 2·m
        let first = lo.max(2 * m / 3 + 1);
        if first <= hi {
            let (f, h) = (first as i64, hi as i64);
            let upper_ends = BigInt::from(self.strided_at(2 * h - mi - 1).clone())
                - BigInt::from(self.strided_at(2 * f - mi - 3).clone());
            let lower_ends = self.halved_prefix_sum(h) - self.halved_prefix_sum(f - 1);
            total -= upper_ends - lower_ends;
        }
        total
            .to_biguint()
            .expect("a_m is a count and cannot be negative")
    }

    /// Appends counts until `max_m() ≥ m`.
    pub fn extend_to(&mut self, m: usize) {
        self.counts.reserve(m.saturating_sub(self.max_m()));
        while self.max_m() < m {
            let k = self.counts.len();
            let value = self.next_count();
            debug_assert!(!value.is_zero(), "a_{k} must be positive");
            let prefix = &self.prefix[k - 1] + &value;
            let strided = &prefix + &self.strided[k - 2];
            let cumulative = &self.cumulative[k - 1] + &prefix;
            self.counts.push(value);
            self.prefix.push(prefix);
            self.strided.push(strided);
            self.cumulative.push(cumulative);
        }
    }
}

/// Dense table of `a_m` for `1 ≤ m ≤ max_m`.
pub fn build_table(max_m: usize) -> CountTable {
    let mut table = CountTable::new();
    table.extend_to(max_m);
    table
}

/// `a_m` from the recurrence, growing `table` if needed.
pub fn a(m: usize, table: &mut CountTable) -> Result<BigUint> {
    if m == 0 {
        return Err(Error::NotPositive("m"));
    }
    table.extend_to(m);
    Ok(table.counts[m].clone())
}

/// Range-sum form valid on the upper half of a block:
/// `a_m = a_{⌊m/2⌋} + ⋯ + a_{2ⁿ−1}`.
pub fn a_simple(m: usize, table: &mut CountTable) -> Result<BigUint> {
    if m < 2 || !is_upper_half(m) {
        return Err(upper_half_error("simple range sum", m));
    }
    let top = (1 << level(m)) - 1;
    table.extend_to(top);
    Ok((m / 2..=top).map(|i| &table.counts[i]).sum())
}

pub(crate) fn upper_half_error(what: &'static str, m: usize) -> Error {
    let (lo, hi) = if m == 0 {
        (1, 1)
    } else {
        upper_half_window(level(m))
    };
    Error::OutOfWindow {
        what,
        value: m.into(),
        lo: lo.into(),
        hi: hi.into(),
    }
}

/// `a_m = a_{m+1}` for even `m` with `2ⁿ + 2ⁿ⁻¹ ≤ m < 2ⁿ⁺¹`.
pub fn a_even_pairing_check(m: usize, table: &mut CountTable) -> Result<bool> {
    if m % 2 == 1 || m < 2 {
        return Err(Error::Domain(format!(
            "parity pairing needs an even m >= 2, got {m}"
        )));
    }
    let n = level(m);
    let lo = (1 << n) + (1 << (n - 1));
    if m < lo {
        return Err(Error::OutOfWindow {
            what: "parity pairing",
            value: m.into(),
            lo: lo.into(),
            hi: ((1usize << (n + 1)) - 2).into(),
        });
    }
    Ok(a(m, table)? == a(m + 1, table)?)
}

/// One summand of the recurrence: `a_{m1}` minus the counts over `subtract`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceTerm {
    pub m1: usize,
    pub count: BigUint,
    pub subtract: ExtensionRange,
    pub subtracted: BigUint,
}

impl RecurrenceTerm {
    pub fn contribution(&self) -> BigUint {
        &self.count - &self.subtracted
    }
}

/// The individual summands of the recurrence for `m ≥ 2`, computed from
/// the extension ranges.
pub fn recurrence_terms(m: usize, table: &mut CountTable) -> Result<Vec<RecurrenceTerm>> {
    let big_m = BigUint::from(m);
    let outer = extension_range_m1(&big_m)?;
    let (lo, hi) = outer.as_usize().expect("m1 range is never empty");
    table.extend_to(hi);
    let mut terms = Vec::with_capacity(hi - lo + 1);
    for m1 in lo..=hi {
        let subtract = extension_range_m12(&BigUint::from(m1), &big_m)?;
        let subtracted = match subtract.as_usize() {
            Some((slo, shi)) => table.range_sum(slo, shi),
            None => BigUint::zero(),
        };
        terms.push(RecurrenceTerm {
            m1,
            count: table.counts[m1].clone(),
            subtract,
            subtracted,
        });
    }
    Ok(terms)
}

/// Top-down evaluation of the literal double sum with a sparse memo.
///
/// Only the `m` reachable from a query are stored. Cost per entry is
/// proportional to the size of the summation ranges, so this is meant for
/// one-off queries of moderate `m`.
#[derive(Debug, Clone, Default)]
pub struct SparseCounter {
    memo: HashMap<usize, BigUint>,
}

impl SparseCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    pub fn a(&mut self, m: usize) -> Result<BigUint> {
        if m == 0 {
            return Err(Error::NotPositive("m"));
        }
        Ok(self.eval(m))
    }

    fn eval(&mut self, m: usize) -> BigUint {
        if m == 1 {
            return BigUint::one();
        }
        if let Some(v) = self.memo.get(&m) {
            return v.clone();
        }
        let n = level(m);
        let hi = ((m + (1 << (n - 1)) - 1) / 2).min((1 << n) - 1);
        let mut total = BigInt::zero();
        for m1 in m / 2..=hi {
            total += BigInt::from(self.eval(m1));
            let inner_hi = 2 * m1 as i64 - m as i64 - 1;
            for m12 in (m1 / 2) as i64..=inner_hi {
                total -= BigInt::from(self.eval(m12 as usize));
            }
        }
        let value = total.to_biguint().expect("a_m is nonnegative");
        self.memo.insert(m, value.clone());
        value
    }
}
