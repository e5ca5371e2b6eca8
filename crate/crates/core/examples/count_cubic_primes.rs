//! Primes n^3 + k up to x against S(k) x^(1/3) / log x.
//!
//!     cargo run --release --example count_cubic_primes [k]

use cubic_primes::counting::{count_table, enumerate_cubic_primes, singular_series, DEFAULT_P_CUTOFF};

fn main() -> cubic_primes::Result<()> {
    let k: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);

    let first: Vec<_> = enumerate_cubic_primes(k, 30)?.into_iter().map(|(_, p)| p).collect();
    println!("first primes n^3 + {k}: {first:?}");
    println!("S({k}) with p <= 1e6: {:.6}", singular_series(k, DEFAULT_P_CUTOFF)?);

    let xs = [1_000_000, 1_000_000_000, 1_000_000_000_000, 1_000_000_000_000_000];
    for r in count_table(k, &xs, DEFAULT_P_CUTOFF)? {
        println!(
            "x = {:>8.0e}  observed = {:>7}  predicted = {:>10.1}  ratio = {:.4}",
            r.x as f64, r.observed, r.predicted, r.ratio
        );
    }
    Ok(())
}
