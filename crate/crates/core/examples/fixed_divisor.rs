//! Fixed divisors of a few integer polynomials.
//!
//!     cargo run --example fixed_divisor

use cubic_primes::arith::fixed_divisor;
use cubic_primes::Polynomial;

fn main() -> cubic_primes::Result<()> {
    let cases: [&[i64]; 5] = [
        &[1, 0, 0, 2],   // x^3 + 2
        &[1, 0, 0, -1],  // x^3 - 1
        &[1, 1, 0],      // x^2 + x, always even
        &[1, 0, 0, -1, 0], // x^4 - x
        &[1, 0, -1, 0],  // x^3 - x = (x-1)x(x+1), divisible by 6
    ];
    for c in cases {
        let f = Polynomial::from_high(c);
        let d = fixed_divisor(&f)?;
        let sample: Vec<String> = (0..5).map(|n| f.eval(n).map(|v| v.to_string())).collect::<Result<_, _>>()?;
        println!("{:<16} gcd f(Z) = {:<3} f(0..5) = {}", f.to_string(), d, sample.join(", "));
    }
    Ok(())
}
