//! Prime values of cubics: counts against the conjectured main term,
//! weighted von Mangoldt sums, progression sums and the prime-power tail.
//!
//! The index domain is every integer `n` at which the polynomial is positive
//! enough to matter: `f(n) >= 2` for prime counts, `1 <= f(n) <= x` for the
//! weighted sums. For `x³ + 2` that is `n >= 0`, so `p = 2` at `n = 0` is
//! counted.

mod asymptotic;
mod chebyshev;
mod progression;

pub use asymptotic::{
    count_cubic_primes, count_table, enumerate_cubic_primes, predicted_count, singular_series,
    CountRecord, DEFAULT_P_CUTOFF,
};
pub use chebyshev::{
    lambda_sum_rhs, prime_power_tail, tail_bound, weighted_lambda_sum, Weight, WeightedSumRecord,
    RHS_BUDGET,
};
pub use progression::{progression_weighted_sum, ProgressionSum};

use crate::arith::{cbrt_ceil, cbrt_floor, Polynomial};
use crate::error::{capacity, domain, resource, Result};

/// Largest number of points scanned directly in the non-monotone middle of a
/// general cubic.
const MIDDLE_SCAN_BUDGET: i128 = 10_000_000;

/// Maximal runs of consecutive integers `n` with `lo <= f(n) <= hi`, ascending.
///
/// `f` must be a cubic with positive leading coefficient. Outside the Cauchy
/// bound of `f'` the cubic is strictly increasing, so those two tails are
/// located by binary search; the bounded middle is scanned.
pub(crate) fn index_runs(f: &Polynomial, lo: i128, hi: i128) -> Result<Vec<(i64, i64)>> {
    if f.degree() != 3 || f.leading() <= 0 {
        return Err(domain(format!("{f} is not a cubic with positive leading coefficient")));
    }
    if hi < lo {
        return Ok(Vec::new());
    }
    if let Some(k) = f.as_cubic_family() {
        let a = cbrt_ceil(lo - k as i128);
        let b = cbrt_floor(hi - k as i128);
        return Ok(if a <= b { vec![(to_i64(a)?, to_i64(b)?)] } else { Vec::new() });
    }
    let (a3, b2, c1) = (f.coeff(3) as i128, f.coeff(2) as i128, f.coeff(1) as i128);
    // f'(n) = 3a n² + 2b n + c; its real roots satisfy |r| < 1 + max(|2b|, |c|) / 3a.
    let r = 2 + (2 * b2.abs()).max(c1.abs()) / (3 * a3);
    if 2 * r + 1 > MIDDLE_SCAN_BUDGET {
        return Err(resource(format!("{f}: non-monotone region too wide to scan")));
    }
    let r = r as i64;
    let val = |n: i64| -> i128 {
        match f.eval(n) {
            Ok(v) => v,
            Err(_) if n > 0 => i128::MAX,
            Err(_) => i128::MIN,
        }
    };
    // smallest n in [from, to] with val(n) >= t, for increasing val; to + 1 if none
    let first_at_least = |from: i64, to: i64, t: i128| -> i64 {
        let (mut l, mut h) = (from, to.saturating_add(1));
        while l < h {
            let m = l + (h - l) / 2;
            if val(m) >= t {
                h = m;
            } else {
                l = m + 1;
            }
        }
        l
    };
    const FAR: i64 = 1 << 40;
    let mut points: Vec<(i64, i64)> = Vec::new();
    let mut push = |a: i64, b: i64| {
        if a <= b {
            match points.last_mut() {
                Some(last) if last.1 + 1 >= a => last.1 = last.1.max(b),
                _ => points.push((a, b)),
            }
        }
    };
    // left tail (−FAR, −r]
    let a = first_at_least(-FAR, -r, lo);
    let b = first_at_least(-FAR, -r, hi.saturating_add(1)) - 1;
    push(a, b.min(-r));
    for n in -r + 1..r {
        let v = val(n);
        if v >= lo && v <= hi {
            push(n, n);
        }
    }
    // right tail [r, FAR)
    let a = first_at_least(r, FAR, lo);
    let b = first_at_least(r, FAR, hi.saturating_add(1)) - 1;
    if b >= FAR - 1 {
        return Err(capacity(format!("{f}: index range unbounded at this x")));
    }
    push(a, b);
    Ok(points)
}

fn to_i64(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| capacity(format!("index {v} outside i64")))
}
