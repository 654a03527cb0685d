//! Breaks `a_m` into the terms of the counting recurrence.
//!
//! ```text
//! cargo run --example recurrence -- 16 25
//! ```

use mpart::counting::recurrence_terms;
use mpart::{count_by_enumeration, CountTable, SparseCounter};

fn main() -> mpart::Result<()> {
    let mut targets: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    if targets.is_empty() {
        targets = vec![16, 25];
    }
    let mut table = CountTable::new();
    for m in targets {
        let terms = recurrence_terms(m, &mut table)?;
        println!("a_{m}:");
        for t in &terms {
            if t.subtract.is_empty() {
                println!("  m1 = {:<4} a = {}", t.m1, t.count);
            } else {
                println!(
                    "  m1 = {:<4} a = {} minus {} (m12 in {}..={})",
                    t.m1, t.count, t.subtracted, t.subtract.lo, t.subtract.hi
                );
            }
        }
        let total: num_bigint::BigUint = terms.iter().map(|t| t.contribution()).sum();
        let sparse = SparseCounter::new().a(m)?;
        println!("  total {total} (sparse evaluator: {sparse})");
        if m <= 300 {
            println!("  by enumeration: {}", count_by_enumeration(m as u64)?);
        }
    }
    Ok(())
}
