//! The set of d for which d | n^3 + 2 has a solution, and how thin it is.
//!
//!     cargo run --release --example divisor_support

use cubic_primes::dset::{dset_density, enumerate_dset, in_dset};
use cubic_primes::series::decade_checkpoints;
use cubic_primes::Polynomial;

fn main() -> cubic_primes::Result<()> {
    let f = Polynomial::cubic_family(2);
    println!("members up to 60: {:?}", enumerate_dset(&f, 60)?);
    // 9 never divides n^3 + 2 even though 3 always can.
    println!("3 in D: {}, 9 in D: {}", in_dset(&f, 3)?, in_dset(&f, 9)?);

    let limit = 10_000_000;
    let stats = dset_density(&f, limit, &decade_checkpoints(limit))?;
    for c in &stats.checkpoints {
        println!("x = {:>9}  count = {:>8}  ratio = {:.5}", c.x, c.count, c.ratio);
    }
    if let Some(fit) = stats.decay {
        println!("ratio ~ {:.3} / (log x)^{:.3}", fit.constant, fit.beta);
    }
    Ok(())
}
