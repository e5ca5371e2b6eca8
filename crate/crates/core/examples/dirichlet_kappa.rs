//! Partial sums of mu(d) log d / d over the divisor support of x^3 + 2.
//!
//!     cargo run --release --example dirichlet_kappa

use cubic_primes::series::kappa_trajectory;
use cubic_primes::Polynomial;

fn main() -> cubic_primes::Result<()> {
    let t = kappa_trajectory(&Polynomial::cubic_family(2), 10_000_000)?;
    for r in &t.records {
        println!("x = {:>9}  sum = {:+.8}  terms = {}", r.x, r.value, r.terms_used);
    }
    match t.fitted_kappa {
        Some(k) => println!("kappa ~ {k:.4} (spread {:.4})", t.fit_residual),
        None => println!("no fit"),
    }
    Ok(())
}
