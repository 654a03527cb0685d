//! Builds witnesses with each of the three constructions.
//!
//! ```text
//! cargo run --example generate -- 53 100 123456789012345678901234567890
//! ```

use mpart::generate::{alg3_window, generate};
use mpart::{is_m_partition, partition::floor_log2};
use num_bigint::BigUint;

fn main() -> mpart::Result<()> {
    let mut targets: Vec<BigUint> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    if targets.is_empty() {
        targets = vec![53u32.into(), 40u32.into(), 1000u32.into()];
    }
    for m in &targets {
        println!("m = {m}");
        for alg in 1..=3u8 {
            match generate(m, alg) {
                Ok(p) => println!("  algorithm {alg}: {p}  (valid: {})", is_m_partition(&p)),
                Err(e) => println!("  {e}"),
            }
        }
        if let Some((lo, hi)) = alg3_window(floor_log2(m)?) {
            println!("  algorithm 3 covers [{lo}, {hi}]");
        }
    }
    Ok(())
}
