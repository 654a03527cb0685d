//! Streams `Mp(m)` in lexicographic order without materialising it.
//!
//! ```text
//! cargo run --example enumerate -- 16
//! ```

use mpart::EnumerationCursor;

fn main() -> mpart::Result<()> {
    let m: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(16);
    let mut cursor = EnumerationCursor::new(m)?;
    let mut count = 0u64;
    while let Some(parts) = cursor.advance() {
        if count < 20 {
            let shown: Vec<String> = parts.iter().map(u64::to_string).collect();
            println!("{}", shown.join("+"));
        }
        count += 1;
    }
    if count > 20 {
        println!("... ({} more)", count - 20);
    }
    println!("|Mp({m})| = {count}");

    // large totals are fine as long as only the count is wanted
    let big = 400;
    println!(
        "|Mp({big})| = {}",
        EnumerationCursor::new(big)?.count_remaining()
    );
    Ok(())
}
