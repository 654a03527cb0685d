//! Prints `a_m` for a range, with running growth and the exact tail.
//!
//! ```text
//! cargo run --example table -- 64
//! ```

use mpart::build_table;

fn main() {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(64);
    let table = build_table(max.max(1 << 16));
    for (m, v) in table.rows().take(max) {
        println!("{m:>6} {v}");
    }
    for n in [10u32, 12, 14, 16] {
        let m = 1usize << n;
        println!(
            "a_2^{n} = {} ({} bits)",
            table.get(m).unwrap(),
            table.get(m).unwrap().bits()
        );
    }
    println!("sum of a_m for m <= {max}: {}", table.range_sum(1, max));
}
