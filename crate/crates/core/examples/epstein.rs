//! Epstein zeta partial sums for the sum-of-squares form and the two
//! forms of discriminant -108.
//!
//!     cargo run --release --example epstein

use cubic_primes::residues::QuadraticForm;
use cubic_primes::series::{epstein_mu_sum, epstein_r, epstein_zeta_partial, epstein_zeta_partial_per_n};

fn main() -> cubic_primes::Result<()> {
    let sq = QuadraticForm::SUM_OF_SQUARES;
    println!("r(n) for x^2 + y^2: {:?}", (1..=10).map(|n| epstein_r(&sq, n)).collect::<Result<Vec<_>, _>>()?);

    // pi * zeta(2) * L(2, chi_-4) = 6.0268120...
    for n in [100u64, 10_000, 1_000_000] {
        println!("Z(2; x^2+y^2) up to {n:>7} = {:.10}", epstein_zeta_partial(&sq, 2.0, n)?);
    }

    for q in [QuadraticForm::RESIDUE_FORM, QuadraticForm::NONRESIDUE_FORM] {
        let (a, b, c) = q.coefficients();
        println!(
            "({a},{b},{c}) s=2 n<=1e5: lattice {:.10}  per-n {:.10}  mu-weighted {:.10}",
            epstein_zeta_partial(&q, 2.0, 100_000)?,
            epstein_zeta_partial_per_n(&q, 2.0, 100_000)?,
            epstein_mu_sum(&q, 2.0, 100_000)?
        );
    }
    Ok(())
}
