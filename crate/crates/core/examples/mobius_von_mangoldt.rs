//! Möbius and von Mangoldt from a linear sieve, and the divisor-sum
//! identity that ties them together.
//!
//!     cargo run --example mobius_von_mangoldt

use cubic_primes::arith::{mobius, sieve_range, von_mangoldt, von_mangoldt_via_mobius};

fn main() -> cubic_primes::Result<()> {
    let tables = sieve_range(1_000_000)?;
    println!("primes below 1e6: {}", tables.primes().len());

    println!("{:>6} {:>3} {:>10} {:>10}", "n", "mu", "Lambda", "via mu");
    for n in [1u64, 2, 4, 6, 8, 9, 12, 30, 49, 97, 1024, 1001] {
        println!(
            "{:>6} {:>3} {:>10.6} {:>10.6}",
            n,
            mobius(n, &tables)?,
            von_mangoldt(n),
            von_mangoldt_via_mobius(n)?
        );
    }

    // Mertens function at a few powers of ten.
    let mut m = 0i64;
    for n in 1..=1_000_000u64 {
        m += tables.mu(n) as i64;
        if power_of_ten(n) {
            println!("M({n}) = {m}");
        }
    }
    Ok(())
}

fn power_of_ten(mut n: u64) -> bool {
    while n >= 10 && n % 10 == 0 {
        n /= 10;
    }
    n == 1
}
