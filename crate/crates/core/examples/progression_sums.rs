//! Sum of n <= x with n^3 = a (mod q), against the per-root closed form.
//!
//!     cargo run --example progression_sums

use cubic_primes::counting::progression_weighted_sum;

fn main() -> cubic_primes::Result<()> {
    for (q, a, x) in [(5u64, -2i64, 20u64), (31, -2, 100), (7, 1, 1000), (13, 5, 10_000), (9, 1, 999)] {
        let s = progression_weighted_sum(q, a, x)?;
        println!(
            "q = {q:>2} a = {a:>2} x = {x:>5}  roots = {:?}  exact = {}  closed = {}  without m=0 = {}  ~ {:.1}",
            s.roots, s.exact, s.closed_form, s.uncorrected_form, s.leading
        );
    }
    Ok(())
}
