//! Weighted sums of Lambda(n^3 + 2) computed directly and through the
//! divisor expansion -sum mu(d) log d sum_{d | n^3+2} n.
//!
//!     cargo run --release --example chebyshev_identity

use cubic_primes::counting::{lambda_sum_rhs, weighted_lambda_sum, Weight};
use cubic_primes::Polynomial;

fn main() -> cubic_primes::Result<()> {
    let f = Polynomial::cubic_family(2);
    for x in [1_000u64, 10_000, 100_000] {
        let lhs = weighted_lambda_sum(&f, Weight::Power(1), x)?;
        let rhs = lambda_sum_rhs(2, x)?;
        println!("x = {x:>6}  direct = {:.8}  expansion = {rhs:.8}", lhs.value);
    }
    for w in [Weight::Power(0), Weight::Power(2), Weight::Totient, Weight::Sigma, Weight::Tau] {
        let r = weighted_lambda_sum(&f, w, 1_000_000)?;
        println!("{:<8} x = 1e6  sum = {:.6e}", w.to_string(), r.value);
    }
    Ok(())
}
