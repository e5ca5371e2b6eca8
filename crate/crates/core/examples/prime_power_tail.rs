//! How much n^3 + k = p^v with v >= 2 contributes to the Lambda sum.
//!
//!     cargo run --release --example prime_power_tail

use cubic_primes::counting::prime_power_tail;

fn main() -> cubic_primes::Result<()> {
    // 2^3 + 1 = 9, 5^3 + 3 = 128, 3^3 - 2 = 25 all hit proper prime powers.
    for k in [1i64, 2, 3, -2, 7] {
        for x in [1_000u64, 1_000_000_000, 1_000_000_000_000] {
            let (tail, bound) = prime_power_tail(k, x)?;
            println!("k = {k:>2}  x = {x:>13}  tail = {tail:>9.4}  bound = {bound:.1}");
        }
    }
    Ok(())
}
