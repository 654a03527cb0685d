//! How far the upper-half closed form overshoots on lower halves, and how
//! often the overshoot carries over to the shifted total.
//!
//! ```text
//! cargo run --example defect -- 8
//! ```

use mpart::counting::{defect_partner, lower_half_window};
use mpart::{build_table, defect, BinarySeries};

fn main() -> mpart::Result<()> {
    let top: u32 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(8);
    let mut table = build_table(1 << (top + 1));
    let mut series = BinarySeries::new();
    for n in 3..=top {
        let (lo, hi) = lower_half_window(n);
        let mut same = 0;
        let mut largest = Default::default();
        for m in lo..=hi {
            let d = defect(m, &mut table, &mut series)?;
            let partner = defect_partner(m).expect("lower half");
            same += usize::from(d == defect(partner, &mut table, &mut series)?);
            largest = std::cmp::max(largest, d);
        }
        println!(
            "n = {n:<2} m in {lo}..={hi}: max defect {largest}, equal to the shifted defect for {same} of {}",
            hi - lo + 1
        );
    }
    Ok(())
}
