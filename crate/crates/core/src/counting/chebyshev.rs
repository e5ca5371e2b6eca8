use std::fmt;
use std::str::FromStr;

use crate::arith::{iroot, is_prime, prime_power, sigma, tau, totient, ArithTables, Polynomial};
use crate::error::{domain, resource, Error, Result};
use crate::par::map_chunks;

use super::index_runs;

/// Weight applied to the index `n` (not to `f(n)`).
///
/// `Power(0)` is accepted so the unweighted sum can be compared with the
/// weighted ones; its error term is not expected to be smaller than its main
/// term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Weight {
    Power(u32),
    Totient,
    Sigma,
    Tau,
}

impl Weight {
    /// `w(n)`; the arithmetic weights use `|n|` and vanish at `n = 0`.
    pub fn at(self, n: i64) -> f64 {
        match self {
            Weight::Power(k) => (n as f64).powi(k as i32),
            Weight::Totient => totient(n.unsigned_abs()) as f64,
            Weight::Sigma => sigma(n.unsigned_abs()) as f64,
            Weight::Tau => tau(n.unsigned_abs()) as f64,
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Power(k) => write!(f, "power:{k}"),
            Weight::Totient => write!(f, "totient"),
            Weight::Sigma => write!(f, "sigma"),
            Weight::Tau => write!(f, "tau"),
        }
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "totient" | "phi" => Ok(Weight::Totient),
            "sigma" => Ok(Weight::Sigma),
            "tau" => Ok(Weight::Tau),
            _ => s
                .strip_prefix("power:")
                .and_then(|k| k.parse().ok())
                .map(Weight::Power)
                .ok_or_else(|| domain(format!("unknown weight {s:?}; use power:K, totient, sigma or tau"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightedSumRecord {
    pub x: u64,
    pub weight: Weight,
    /// `Σ w(n) Λ(f(n))` over `1 <= f(n) <= x`.
    pub value: f64,
    /// The part of `value` where `f(n)` is a prime power `p^v` with `v >= 2`.
    pub tail_value: f64,
    /// `x^(1/2) log² x`.
    pub bound: f64,
}

/// `x^(1/2) log² x`, the reference curve for the prime-power tail.
pub fn tail_bound(x: u64) -> f64 {
    let xf = x as f64;
    if x <= 1 {
        0.0
    } else {
        xf.sqrt() * xf.ln().powi(2)
    }
}

/// `Σ_{1 <= f(n) <= x} w(n) Λ(f(n))` for a cubic `f` with positive leading
/// coefficient, with `Λ` evaluated exactly from prime-power detection.
pub fn weighted_lambda_sum(f: &Polynomial, weight: Weight, x: u64) -> Result<WeightedSumRecord> {
    let runs = index_runs(f, 1, x as i128)?;
    let mut value = 0.0;
    let mut tail_value = 0.0;
    for (a, b) in runs {
        let parts = map_chunks(a, b, |lo, hi| -> Result<(f64, f64)> {
            let (mut all, mut tail) = (0.0, 0.0);
            for n in lo..=hi {
                if let Some((p, v)) = prime_power(f.eval_u64(n)?) {
                    let term = weight.at(n) * (p as f64).ln();
                    all += term;
                    if v >= 2 {
                        tail += term;
                    }
                }
            }
            Ok((all, tail))
        });
        for part in parts {
            let (all, tail) = part?;
            value += all;
            tail_value += tail;
        }
    }
    Ok(WeightedSumRecord { x, weight, value, tail_value, bound: tail_bound(x) })
}

/// Largest `x` accepted by [`lambda_sum_rhs`].
pub const RHS_BUDGET: u64 = 100_000;

/// The divisor-side expansion of `Σ_{1 <= n³+k <= x} n Λ(n³ + k)`:
///
/// `−Σ_{d <= x} μ(d) log d · Σ_{n : d | n³ + k} n`,
///
/// with `μ` from the sieve and the inner sum found by testing divisibility
/// for every index `n` of the range. No prime-power detection is involved,
/// so this is an independent evaluation of [`weighted_lambda_sum`] with
/// weight `n`.
pub fn lambda_sum_rhs(k: i64, x: u64) -> Result<f64> {
    if x > RHS_BUDGET {
        return Err(resource(format!("x = {x} above divisor-side budget {RHS_BUDGET}")));
    }
    let f = Polynomial::cubic_family(k);
    let indices: Vec<(i64, u64)> = index_runs(&f, 1, x as i128)?
        .into_iter()
        .flat_map(|(a, b)| a..=b)
        .map(|n| Ok((n, f.eval_u64(n)?)))
        .collect::<Result<_>>()?;
    let d_max = indices.iter().map(|&(_, v)| v).max().unwrap_or(0);
    if d_max < 2 {
        return Ok(0.0);
    }
    let tables = ArithTables::new(d_max)?;
    let mut total = 0.0;
    for d in 2..=d_max {
        let mu = tables.mu(d);
        if mu == 0 {
            continue;
        }
        let inner: i128 = indices.iter().filter(|&&(_, v)| v % d == 0).map(|&(n, _)| n as i128).sum();
        if inner != 0 {
            total -= mu as f64 * (d as f64).ln() * inner as f64;
        }
    }
    Ok(total)
}

/// Contribution of proper prime powers: `Σ n Λ(n³ + k)` over
/// `n³ + k = p^v <= x` with `v >= 2`, and the reference bound
/// `x^(1/2) log² x`.
pub fn prime_power_tail(k: i64, x: u64) -> Result<(f64, f64)> {
    let f = Polynomial::cubic_family(k);
    let mut tail = 0.0;
    for (a, b) in index_runs(&f, 1, x as i128)? {
        let parts = map_chunks(a, b, |lo, hi| -> Result<f64> {
            let mut s = 0.0;
            for n in lo..=hi {
                if let Some(p) = proper_prime_power_base(f.eval_u64(n)?) {
                    s += n as f64 * (p as f64).ln();
                }
            }
            Ok(s)
        });
        for part in parts {
            tail += part?;
        }
    }
    Ok((tail, tail_bound(x)))
}

/// `p` when `m = p^v` with `v >= 2`, by exact integer root extraction.
fn proper_prime_power_base(m: u64) -> Option<u64> {
    if m < 4 {
        return None;
    }
    let max_v = 63 - m.leading_zeros();
    (2..=max_v).find_map(|v| {
        let r = iroot(m, v);
        (r.checked_pow(v) == Some(m) && is_prime(r)).then_some(r)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ln(x: f64) -> f64 {
        x.ln()
    }

    #[test]
    fn weight_parsing() {
        assert_eq!("power:3".parse::<Weight>(), Ok(Weight::Power(3)));
        assert_eq!("tau".parse::<Weight>(), Ok(Weight::Tau));
        assert!("power:x".parse::<Weight>().is_err());
        assert_eq!(Weight::Power(2).to_string(), "power:2");
        assert_eq!(Weight::Power(0).at(0), 1.0);
        assert_eq!(Weight::Totient.at(0), 0.0);
    }

    #[test]
    fn weighted_examples() {
        let f = Polynomial::cubic_family(2);
        let r = weighted_lambda_sum(&f, Weight::Power(1), 130).unwrap();
        let oracle = ln(3.0) + 3.0 * ln(29.0) + 5.0 * ln(127.0);
        assert!((r.value - oracle).abs() < 1e-12);
        assert!((r.value - 35.4214).abs() < 1e-4);
        assert_eq!(r.tail_value, 0.0);
        assert_eq!(weighted_lambda_sum(&f, Weight::Power(1), 2).unwrap().value, 0.0);
        let t = weighted_lambda_sum(&f, Weight::Tau, 130).unwrap();
        assert!((t.value - (ln(3.0) + 2.0 * ln(29.0) + 2.0 * ln(127.0))).abs() < 1e-12);
        assert!((t.value - 17.5218).abs() < 1e-3);
        let p0 = weighted_lambda_sum(&f, Weight::Power(0), 130).unwrap();
        assert!((p0.value - (ln(2.0) + ln(3.0) + ln(29.0) + ln(127.0))).abs() < 1e-12);
    }

    #[test]
    fn tail_counts_in_weighted_sum() {
        // x^3 + 1: n = 2 gives 9 = 3^2
        let f = Polynomial::cubic_family(1);
        let r = weighted_lambda_sum(&f, Weight::Power(1), 9).unwrap();
        assert!((r.tail_value - 2.0 * ln(3.0)).abs() < 1e-12);
        assert!(r.tail_value <= r.value);
    }

    #[test]
    fn rhs_examples() {
        let f = Polynomial::cubic_family(2);
        for x in [2u64, 130, 1000] {
            let lhs = weighted_lambda_sum(&f, Weight::Power(1), x).unwrap().value;
            let rhs = lambda_sum_rhs(2, x).unwrap();
            assert!((lhs - rhs).abs() <= 1e-9 * lhs.abs().max(1.0), "x={x}: {lhs} vs {rhs}");
        }
        assert!(matches!(lambda_sum_rhs(2, RHS_BUDGET + 1), Err(Error::Resource(_))));
        // other k, including one with prime-power values
        for k in [1i64, 3, -1, 7] {
            let f = Polynomial::cubic_family(k);
            let lhs = weighted_lambda_sum(&f, Weight::Power(1), 20_000).unwrap().value;
            let rhs = lambda_sum_rhs(k, 20_000).unwrap();
            assert!((lhs - rhs).abs() <= 1e-9 * lhs.abs().max(1.0), "k={k}");
        }
    }

    #[test]
    fn tail_examples() {
        assert_eq!(prime_power_tail(2, 130).unwrap().0, 0.0);
        let (t, _) = prime_power_tail(1, 9).unwrap();
        assert!((t - 2.0 * ln(3.0)).abs() < 1e-12);
        assert_eq!(prime_power_tail(5, 1).unwrap(), (0.0, 0.0));
        assert_eq!(proper_prime_power_base(1 << 40), Some(2));
        assert_eq!(proper_prime_power_base(36), None);
        assert_eq!(proper_prime_power_base(127), None);
    }
}
