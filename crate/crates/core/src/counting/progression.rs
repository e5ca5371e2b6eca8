//! Sums of `n` over the solutions of `n³ ≡ a (mod q)`.
//!
//! Each root `b ∈ [0, q)` contributes the progression `b, b + q, …, b + Mq`
//! with `M = ⌊(x − b)/q⌋`, whose sum is `q·M(M+1)/2 + b(M + 1)`. The commonly
//! quoted form `q·M(M+1)/2 + b·M` drops the `m = 0` element `b`; for
//! `q = 5, b = 2, x = 20` it gives 36 where the true sum `2 + 7 + 12 + 17` is
//! 38. Both are reported; only the corrected one is required to be exact.

use crate::arith::Polynomial;
use crate::error::{capacity, domain, resource, Result};
use crate::residues::roots_mod;

/// Largest number of progression terms walked by the direct summation.
const TERM_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq)]
pub struct ProgressionSum {
    pub q: u64,
    pub a: i64,
    pub x: u64,
    /// Solutions `b ∈ [0, q)` of `b³ ≡ a (mod q)`.
    pub roots: Vec<u64>,
    /// `Σ_{1 <= n <= x, n³ ≡ a} n`, by walking each progression.
    pub exact: u64,
    /// `Σ_b [q·M(M+1)/2 + b(M+1)]` over roots `b <= x`.
    pub closed_form: u64,
    /// `Σ_b [q·M(M+1)/2 + b·M]` over roots `b <= x` (missing the `m = 0` term).
    pub uncorrected_form: u64,
    /// `ρ(q) x² / (2q)` with `ρ(q) = |roots|`.
    pub leading: f64,
}

pub fn progression_weighted_sum(q: u64, a: i64, x: u64) -> Result<ProgressionSum> {
    if q == 0 {
        return Err(domain("q must be >= 1"));
    }
    if x == 0 {
        return Err(domain("x must be >= 1"));
    }
    let roots = roots_mod(&Polynomial::from_low(vec![a.wrapping_neg(), 0, 0, 1]), q)?;
    let walked = (roots.len() as u64).saturating_mul(x / q + 1);
    if walked > TERM_BUDGET {
        return Err(resource(format!("{walked} progression terms above budget {TERM_BUDGET}")));
    }
    let mut exact: u128 = 0;
    let mut closed: u128 = 0;
    let mut uncorrected: u128 = 0;
    for &b in &roots {
        let mut n = b;
        while n <= x {
            exact += n as u128;
            n += q;
        }
        if b <= x {
            let m = ((x - b) / q) as u128;
            let (q, b) = (q as u128, b as u128);
            let arith = q * m * (m + 1) / 2;
            closed += arith + b * (m + 1);
            uncorrected += arith + b * m;
        }
    }
    let fit = |v: u128| u64::try_from(v).map_err(|_| capacity("progression sum exceeds u64"));
    let xf = x as f64;
    Ok(ProgressionSum {
        q,
        a,
        x,
        leading: roots.len() as f64 * xf * xf / (2.0 * q as f64),
        roots,
        exact: fit(exact)?,
        closed_form: fit(closed)?,
        uncorrected_form: fit(uncorrected)?,
    })
}
