//! Realize every covered sequence of each length and check each result
//! with the oracle.
//!
//!     cargo run --release --example sweep -- 10

use z3real::sweep::sweep_n;
use z3real::RealizeOptions;

fn main() {
    let n_max: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(9);
    let opts = RealizeOptions::default();
    for n in 5..=n_max {
        let row = sweep_n(n, &opts);
        println!(
            "n={n:2} covered={:4} passed={:4} certified={:4} {}",
            row.covered,
            row.passed,
            row.certified,
            if row.ok() { "pass" } else { "FAIL" }
        );
        for (s, e) in &row.failures {
            println!("    {s}: {e}");
        }
    }
}
