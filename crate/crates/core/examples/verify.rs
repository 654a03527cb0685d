//! Checks a few part lists, showing where each failure is caught.
//!
//! ```text
//! cargo run --example verify
//! ```

use mpart::{is_m_partition, is_weak_m_partition, largest_part_bounds, subset_sums, Partition};

fn main() -> mpart::Result<()> {
    let lists: [&[u64]; 4] = [
        &[1, 2, 4, 8, 16, 22],
        &[1, 1, 1, 5],
        &[1, 2, 4, 8, 19, 19],
        &[1, 1, 3, 4],
    ];
    for parts in lists {
        let p = Partition::from_u64s(parts)?;
        let sums = subset_sums(&p)?;
        let bounds = largest_part_bounds(p.total())?;
        println!(
            "{p:<20} m = {:<3} weak: {:<5} M-partition: {:<5} largest part in [{}, {}]",
            p.total(),
            is_weak_m_partition(&p),
            is_m_partition(&p),
            bounds.lower,
            bounds.upper,
        );
        match sums.first_gap() {
            Some(gap) => println!("    {gap} is not a sum of parts"),
            None => println!("    every 0..={} is a sum of parts", p.total()),
        }
    }
    Ok(())
}
