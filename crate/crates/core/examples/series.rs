//! The binary-partition sequence, its generating function, and the upper
//! half closed form for `a_m`.
//!
//! ```text
//! cargo run --example series -- 20
//! ```

use mpart::counting::{is_upper_half, upper_half_window};
use mpart::{a_upper_half_via_b, a_via_genfun, build_table, gf_coefficients, BinarySeries};

fn main() -> mpart::Result<()> {
    let j: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(20);
    let mut series = BinarySeries::new();
    let coeffs = gf_coefficients(j);
    for (i, c) in coeffs.iter().enumerate() {
        println!("b_{i:<3} = {:<8} coefficient {c}", series.b(i));
    }

    let table = build_table(1 << 10);
    for n in 3..=9u32 {
        let (lo, hi) = upper_half_window(n);
        let agree = (lo..=hi).filter(|&m| is_upper_half(m)).all(|m| {
            let expected = table.get(m).unwrap();
            a_upper_half_via_b(m, &mut series).as_ref() == Ok(expected)
                && a_via_genfun(m, &mut series).as_ref() == Ok(expected)
        });
        println!("upper half {lo}..={hi}: closed form agrees with the table: {agree}");
    }
    Ok(())
}
