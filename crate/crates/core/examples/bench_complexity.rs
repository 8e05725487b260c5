//! Times the three decompositions on G(n, 1/2) and fits the growth exponent.
//!
//!     cargo run --release --example bench_complexity -- [samples]

use peelcore::bench::{complexity_check, time_methods};
use peelcore::prelude::*;

fn main() -> Result<()> {
    let samples = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(200);
    let sizes: Vec<usize> = (10..=40).step_by(5).collect();
    let table = time_methods(&sizes, samples, 0.5, 0)?;

    println!(
        "{:>4} {:>9} {:>12} {:>12} {:>12}",
        "n", "method", "mean (us)", "t/n^2 (ns)", "t/n^3 (ns)"
    );
    for row in &table.rows {
        println!(
            "{:>4} {:>9} {:>12.3} {:>12.3} {:>12.4}",
            row.n,
            row.method.to_string(),
            row.mean_seconds * 1e6,
            row.per_n2() * 1e9,
            row.per_n3() * 1e9
        );
    }
    for fit in complexity_check(&table)? {
        println!("{}: time grows like n^{:.2}", fit.method, fit.exponent);
    }
    Ok(())
}
