//! Number of roots of x^3 + k modulo q: the multiplicative product over
//! prime factors against a direct scan.
//!
//!     cargo run --example solution_count

use cubic_primes::arith::factorize;
use cubic_primes::residues::{rho, rho_bruteforce, roots_mod};
use cubic_primes::Polynomial;

fn main() -> cubic_primes::Result<()> {
    let k = 2;
    let f = Polynomial::cubic_family(k);
    for q in [15u64, 31, 35, 43, 93, 9, 217, 1333, 2821] {
        let formula = if factorize(q).is_squarefree() { rho(k, q)?.to_string() } else { "-".into() };
        let roots = roots_mod(&f, q)?;
        println!("q = {q:>5}  product = {formula:>2}  scan = {}  roots = {roots:?}", rho_bruteforce(&f, q)?);
    }
    Ok(())
}
