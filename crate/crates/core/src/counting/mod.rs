//! Counting `a_m = |Mp(m)|`.
//!
//! [`CountTable`] evaluates the two-level recurrence bottom-up. On the upper
//! half of each dyadic block the count collapses to a plain range sum
//! ([`a_simple`]) and further to a term of the binary-partition sequence
//! ([`a_upper_half_via_b`]), which is also a coefficient of
//! `(1−x)⁻¹ ∏ (1−x^{2^j})⁻¹` ([`gf_coefficients`]).

mod series;
mod table;

pub use series::{
    a_upper_half_via_b, a_via_genfun, defect, defect_partner, defect_transfer_rhs, gf_coefficients,
    gf_coefficients_in_order, BinarySeries,
};
pub use table::{
    a, a_even_pairing_check, a_simple, build_table, recurrence_terms, CountTable, RecurrenceTerm,
    SparseCounter,
};

/// `⌊log₂ m⌋` for `m ≥ 1`.
pub(crate) fn level(m: usize) -> u32 {
    debug_assert!(m > 0);
    usize::BITS - 1 - m.leading_zeros()
}

/// `[2ⁿ + 2ⁿ⁻¹ − 1, 2ⁿ⁺¹ − 1]`, the block where the count is a plain range sum.
/// For `n = 0` this is just `[1, 1]`.
pub fn upper_half_window(n: u32) -> (usize, usize) {
    if n == 0 {
        return (1, 1);
    }
    ((1 << n) + (1 << (n - 1)) - 1, (1 << (n + 1)) - 1)
}

/// `[2ⁿ, 2ⁿ + 2ⁿ⁻¹ − 2]`; empty (`lo > hi`) for `n ≤ 1`.
pub fn lower_half_window(n: u32) -> (usize, usize) {
    if n == 0 {
        return (1, 0);
    }
    (1 << n, (1 << n) + (1 << (n - 1)) - 2)
}

pub fn is_upper_half(m: usize) -> bool {
    m > 0 && {
        let (lo, hi) = upper_half_window(level(m));
        (lo..=hi).contains(&m)
    }
}

pub fn is_lower_half(m: usize) -> bool {
    m > 0 && !is_upper_half(m)
}
