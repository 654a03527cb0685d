use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::table::{a, upper_half_error};
use super::{is_lower_half, is_upper_half, level, CountTable};
use crate::error::{Error, Result};

/// The binary-partition sequence `b_0 = 1`, `b_j = b_{j−1} + b_{⌊j/2⌋}`,
/// together with a cached prefix of the coefficients of
/// `(1−x)⁻¹ ∏_{j≥0} (1−x^{2^j})⁻¹`.
///
/// `b_j` is the number of partitions of `2j` into powers of two.
#[derive(Debug, Clone)]
pub struct BinarySeries {
    b: Vec<BigUint>,
    coeffs: Vec<BigUint>,
}

impl Default for BinarySeries {
    fn default() -> Self {
        Self::new()
    }
}

impl BinarySeries {
    pub fn new() -> Self {
        Self {
            b: vec![BigUint::one()],
            coeffs: Vec::new(),
        }
    }

    /// Extends the recurrence through index `j`.
    pub fn extend_to(&mut self, j: usize) {
        self.b.reserve((j + 1).saturating_sub(self.b.len()));
        while self.b.len() <= j {
            let i = self.b.len();
            let next = &self.b[i - 1] + &self.b[i / 2];
            self.b.push(next);
        }
    }

    pub fn b(&mut self, j: usize) -> &BigUint {
        self.extend_to(j);
        &self.b[j]
    }

    /// Terms computed so far.
    pub fn terms(&self) -> &[BigUint] {
        &self.b
    }

    /// Series coefficients `0..=n`, recomputed from the product when the
    /// cached prefix is too short.
    pub fn coefficients(&mut self, n: usize) -> &[BigUint] {
        if self.coeffs.len() <= n {
            let target = n.max(2 * self.coeffs.len());
            self.coeffs = gf_coefficients(target);
        }
        &self.coeffs[..=n]
    }
}

/// Multiplies the truncated series in place by `(1 − x^step)⁻¹`.
fn divide_by_one_minus_x_pow(c: &mut [BigUint], step: usize) {
    for i in step..c.len() {
        let (done, rest) = c.split_at_mut(i);
        rest[0] += &done[i - step];
    }
}

/// The factors of the product, by exponent: each power of two up to `n`
/// and the extra `(1−x)⁻¹`.
fn factor_steps(n: usize) -> Vec<usize> {
    let mut steps: Vec<usize> = std::iter::successors(Some(1usize), |s| s.checked_mul(2))
        .take_while(|&s| s <= n.max(1))
        .collect();
    steps.push(1);
    steps
}

/// Coefficients of `x⁰ … xⁿ` in `(1−x)⁻¹ ∏_{j≥0} (1−x^{2^j})⁻¹`.
///
/// Factors with `2^j > n` leave the truncated prefix unchanged and are
/// skipped.
pub fn gf_coefficients(n: usize) -> Vec<BigUint> {
    gf_coefficients_in_order(n, &factor_steps(n))
}

/// As [`gf_coefficients`], applying the factors `(1 − x^step)⁻¹` in the
/// given order. Any order of the same multiset of steps gives the same
/// coefficients.
pub fn gf_coefficients_in_order(n: usize, steps: &[usize]) -> Vec<BigUint> {
    let mut c = vec![BigUint::zero(); n + 1];
    c[0] = BigUint::one();
    for &step in steps {
        assert!(step > 0, "factor exponent must be positive");
        divide_by_one_minus_x_pow(&mut c, step);
    }
    c
}

/// `k = 2ⁿ⁺¹ − 1 − m`, the distance of `m` below the end of its block.
fn block_offset(m: usize) -> usize {
    (1 << (level(m) + 1)) - 1 - m
}

/// `a_m = b_{⌊k/2⌋}` with `k = 2ⁿ⁺¹ − 1 − m` on the upper half of a block.
pub fn a_upper_half_via_b(m: usize, series: &mut BinarySeries) -> Result<BigUint> {
    if !is_upper_half(m) {
        return Err(upper_half_error("closed form via b", m));
    }
    Ok(series.b(block_offset(m) / 2).clone())
}

/// `a_m` read off as the coefficient of `x^{⌊k/2⌋}` in the generating
/// function, on the upper half of a block.
pub fn a_via_genfun(m: usize, series: &mut BinarySeries) -> Result<BigUint> {
    if !is_upper_half(m) {
        return Err(upper_half_error("generating function", m));
    }
    let j = block_offset(m) / 2;
    Ok(series.coefficients(j)[j].clone())
}

/// `b_{⌊k/2⌋} − a_m`; zero on the upper half and, by convention, at `m = 1`.
pub fn defect(m: usize, table: &mut CountTable, series: &mut BinarySeries) -> Result<BigInt> {
    if m == 0 {
        return Err(Error::NotPositive("m"));
    }
    if m == 1 {
        return Ok(BigInt::zero());
    }
    let b = BigInt::from(series.b(block_offset(m) / 2).clone());
    Ok(b - BigInt::from(a(m, table)?))
}

/// `m′ = m − 2ⁿ⁻¹ − 2ⁿ⁻²` for a lower-half `m` with `n ≥ 3`.
pub fn defect_partner(m: usize) -> Option<usize> {
    if m == 0 || !is_lower_half(m) {
        return None;
    }
    let n = level(m);
    (n >= 3).then(|| m - (1 << (n - 1)) - (1 << (n - 2)))
}

/// The partner side of the lower-half defect relation with the partner's
/// offset measured from the block of `m`: `b_{⌊k′/2⌋} − a_{m′}` where
/// `m′ = 2ⁿ − 1 − k′`.
///
/// Returns `None` when `m` is outside the relation's domain.
pub fn defect_transfer_rhs(
    m: usize,
    table: &mut CountTable,
    series: &mut BinarySeries,
) -> Result<Option<BigInt>> {
    let Some(partner) = defect_partner(m) else {
        return Ok(None);
    };
    let k_partner = (1 << level(m)) - 1 - partner;
    let b = BigInt::from(series.b(k_partner / 2).clone());
    Ok(Some(b - BigInt::from(a(partner, table)?)))
}
