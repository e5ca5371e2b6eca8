//! Cubic residuacity by Euler's criterion, checked against the
//! representation of p by x^2 + 27y^2 or 4x^2 + 2xy + 7y^2.
//!
//!     cargo run --example cubic_residues

use cubic_primes::residues::{
    canonical_cube_root_of_unity, classify_primes, cubic_residue_euler, gauss_classify,
};

fn main() -> cubic_primes::Result<()> {
    for p in [7u64, 13, 19, 31, 37, 43, 61, 67, 73, 79] {
        let class = cubic_residue_euler(2, p)?;
        let g = gauss_classify(p)?;
        let (u, v) = g.witness.unwrap_or((0, 0));
        println!(
            "p = {p:>3}  zeta = {:>2}  2 is {:?} (m = {:?})  {:?} ({u}, {v})",
            canonical_cube_root_of_unity(p)?,
            class.tag,
            class.exponent,
            g.branch
        );
    }

    let all = classify_primes(100_000);
    let bad = all.iter().filter(|r| r.is_err()).count();
    let residue = all.iter().filter(|r| matches!(r, Ok(c) if c.rho_p == 3)).count();
    println!("p = 1 mod 3 below 1e5: {} primes, 2 a cube mod {residue}, {bad} disagreements", all.len());
    Ok(())
}
