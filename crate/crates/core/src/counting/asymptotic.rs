use crate::arith::{is_prime, primes_up_to, Polynomial};
use crate::error::{capacity, domain, Result};
use crate::par::map_chunks;
use crate::residues::chi;

use super::index_runs;

/// Default truncation point of the singular-series product.
pub const DEFAULT_P_CUTOFF: u64 = 1_000_000;

/// Observed and predicted count of primes `n³ + k <= x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CountRecord {
    pub x: u64,
    pub observed: u64,
    pub predicted: f64,
    pub ratio: f64,
    pub p_cutoff: u64,
    /// `x^(1/3) / log² x`, the size of the unquantified secondary term.
    pub error_scale: f64,
}

/// All `(n, n³ + k)` with `n³ + k` prime and `n <= n_max`, ascending in `n`.
pub fn enumerate_cubic_primes(k: i64, n_max: i64) -> Result<Vec<(i64, u64)>> {
    let f = Polynomial::cubic_family(k);
    let top = f.eval(n_max)?;
    if top > u64::MAX as i128 {
        return Err(capacity(format!("{n_max}^3 + {k} exceeds u64")));
    }
    let runs = index_runs(&f, 2, top)?;
    let mut out = Vec::new();
    for (a, b) in runs {
        for part in map_chunks(a, b, |lo, hi| primes_in(&f, lo, hi)) {
            out.extend(part);
        }
    }
    Ok(out)
}

fn primes_in(f: &Polynomial, lo: i64, hi: i64) -> Vec<(i64, u64)> {
    (lo..=hi)
        .filter_map(|n| {
            let v = f.eval_u64(n).ok()?;
            is_prime(v).then_some((n, v))
        })
        .collect()
}

/// `π_f(x) = #{n : 2 <= n³ + k <= x, n³ + k prime}`.
pub fn count_cubic_primes(k: i64, x: u64) -> Result<u64> {
    let f = Polynomial::cubic_family(k);
    let mut total = 0;
    for (a, b) in index_runs(&f, 2, x as i128)? {
        total += map_chunks(a, b, |lo, hi| primes_in(&f, lo, hi).len() as u64)
            .into_iter()
            .sum::<u64>();
    }
    Ok(total)
}

/// `Π (1 − 2χ(−k)/(p − 1))` over primes `p ≡ 1 (mod 3)`, `p ∤ k`,
/// `p <= p_cutoff`, multiplied in increasing `p`.
///
/// The infinite product converges only conditionally, so the order of the
/// factors is part of the definition.
pub fn singular_series(k: i64, p_cutoff: u64) -> Result<f64> {
    if p_cutoff < 2 {
        return Err(domain("p_cutoff must be >= 2"));
    }
    let mut prod = 1.0;
    for p in primes_up_to(p_cutoff) {
        if p % 3 != 1 || (k as i128).rem_euclid(p as i128) == 0 {
            continue;
        }
        prod *= 1.0 - 2.0 * chi(k, p)?.value() / (p - 1) as f64;
    }
    Ok(prod)
}

fn main_term(series: f64, x: u64) -> f64 {
    let xf = x as f64;
    series * xf.cbrt() / xf.ln()
}

/// Main term `S · x^(1/3) / log x` of the conjectured count.
pub fn predicted_count(k: i64, x: u64, p_cutoff: u64) -> Result<f64> {
    if x < 8 {
        return Err(domain(format!("x = {x}; predicted count needs x >= 8")));
    }
    Ok(main_term(singular_series(k, p_cutoff)?, x))
}

/// One record per checkpoint from a single pass over `n`.
pub fn count_table(k: i64, checkpoints: &[u64], p_cutoff: u64) -> Result<Vec<CountRecord>> {
    if checkpoints.is_empty() {
        return Ok(Vec::new());
    }
    if checkpoints.windows(2).any(|w| w[0] >= w[1]) {
        return Err(domain("checkpoints must be strictly ascending"));
    }
    if checkpoints[0] < 8 {
        return Err(domain("checkpoints must be >= 8"));
    }
    let series = singular_series(k, p_cutoff)?;
    let f = Polynomial::cubic_family(k);
    let x_max = *checkpoints.last().unwrap();
    let mut values: Vec<u64> = Vec::new();
    for (a, b) in index_runs(&f, 2, x_max as i128)? {
        for part in map_chunks(a, b, |lo, hi| primes_in(&f, lo, hi)) {
            values.extend(part.into_iter().map(|(_, v)| v));
        }
    }
    values.sort_unstable();
    Ok(checkpoints
        .iter()
        .map(|&x| {
            let observed = values.partition_point(|&v| v <= x) as u64;
            let predicted = main_term(series, x);
            let xf = x as f64;
            CountRecord {
                x,
                observed,
                predicted,
                ratio: observed as f64 / predicted,
                p_cutoff,
                error_scale: xf.cbrt() / xf.ln().powi(2),
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_cubic_primes(2, 5).unwrap(), vec![(0, 2), (1, 3), (3, 29), (5, 127)]);
        assert_eq!(enumerate_cubic_primes(2, 2).unwrap(), vec![(0, 2), (1, 3)]);
        assert_eq!(enumerate_cubic_primes(1, 1).unwrap(), vec![(1, 2)]);
        assert!(enumerate_cubic_primes(2, 3_000_000).is_err());
        // negative indices: k = 100 reaches down to n = -4
        let e = enumerate_cubic_primes(100, 3).unwrap();
        assert_eq!(e.first(), Some(&(-3, 73)));
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_cubic_primes(2, 130), Ok(4));
        assert_eq!(count_cubic_primes(2, 1), Ok(0));
        assert_eq!(count_cubic_primes(2, 127), Ok(4));
        assert_eq!(count_cubic_primes(2, 126), Ok(3));
    }

    #[test]
    fn count_is_monotone_and_matches_enumeration() {
        let mut prev = 0;
        for x in (2..200_000u64).step_by(997) {
            let c = count_cubic_primes(2, x).unwrap();
            assert!(c >= prev);
            prev = c;
        }
        let n_max = 300i64;
        let list = enumerate_cubic_primes(2, n_max).unwrap();
        assert_eq!(count_cubic_primes(2, (n_max as u64).pow(3) + 2).unwrap(), list.len() as u64);
    }

    #[test]
    fn singular_series_examples() {
        assert_eq!(singular_series(2, 2), Ok(1.0));
        assert!((singular_series(2, 7).unwrap() - 7.0 / 6.0).abs() < 1e-15);
        assert!((singular_series(2, 13).unwrap() - 91.0 / 72.0).abs() < 1e-15);
        // p = 31 is the first residue prime: factor 1 - 2/30
        assert!((singular_series(2, 31).unwrap() / singular_series(2, 30).unwrap() - 28.0 / 30.0).abs() < 1e-15);
        assert!(singular_series(2, 1).is_err());
        // p | k primes are skipped: k = 7 drops p = 7
        assert_eq!(singular_series(7, 7), Ok(1.0));
    }

    #[test]
    fn predicted_examples() {
        let p = predicted_count(2, 8, 2).unwrap();
        assert!((p - 2.0 / 8f64.ln()).abs() < 1e-12);
        assert!((p - 0.9618).abs() < 1e-4);
        assert!(predicted_count(2, 7, 2).is_err());
        let s = singular_series(2, 1000).unwrap();
        let x = 123_456_789u64;
        let ratio = predicted_count(2, x, 1000).unwrap() / ((x as f64).cbrt() / (x as f64).ln());
        assert!((ratio - s).abs() < 1e-12);
    }

    #[test]
    fn table_examples() {
        assert!(count_table(2, &[], 100).unwrap().is_empty());
        let t = count_table(2, &[130], 100).unwrap();
        assert_eq!(t[0].observed, 4);
        assert!((t[0].ratio - t[0].observed as f64 / t[0].predicted).abs() < 1e-12);
        assert!(count_table(2, &[100, 10], 100).is_err());
        assert!(count_table(2, &[4], 100).is_err());
        let t = count_table(2, &[1_000, 1_000_000], 10_000).unwrap();
        assert_eq!(t[1].observed, count_cubic_primes(2, 1_000_000).unwrap());
        assert!(t[1].ratio > 0.5 && t[1].ratio < 2.0, "{:?}", t[1]);
    }
}
