//! Closed form 2^n - 1 against the linear recurrence.
//!
//!     cargo run --release --example benchmark -- 1000 100000 1000000

use kmersenne::cli::bench_row;

fn main() -> kmersenne::Result<()> {
    let ns: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let ns = if ns.is_empty() {
        vec![10, 1_000, 10_000, 100_000, 1_000_000]
    } else {
        ns
    };
    println!(
        "{:>9} {:>12} {:>12} {:>6}",
        "n", "closed (s)", "recur (s)", "equal"
    );
    for n in ns {
        let row = bench_row(n, 100_000)?;
        let oracle = row
            .oracle_secs
            .map_or("skipped".to_string(), |s| format!("{s:.6}"));
        let equal = row.equal.map_or("-".to_string(), |e| e.to_string());
        println!(
            "{:>9} {:>12.6} {:>12} {:>6}",
            n, row.closed_form_secs, oracle, equal
        );
    }
    Ok(())
}
