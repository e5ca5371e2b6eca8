//! The divisor-support set `D_f = {d >= 1 : f(x) ≡ 0 (mod d) is solvable}`.
//!
//! Membership is true solvability. For `f = x³ + 2` this excludes `4` and `9`
//! even though `2` and `3` are members: a prime-by-prime condition on `d` is
//! not enough once prime powers appear.
//!
//! [`in_dset`] answers single queries by factoring `d` and scanning each
//! prime-power modulus. [`enumerate_dset`] sieves a whole range: per prime it
//! finds the largest solvable exponent (root finding over `F_p` plus Hensel
//! lifting), then combines prime powers multiplicatively through the
//! smallest-prime-factor table.

use rayon::prelude::*;

use crate::arith::{factorize, powmod, ArithTables, Polynomial};
use crate::error::{domain, resource, Result};
use crate::residues::BRUTE_FORCE_BUDGET;

/// Largest range accepted by [`enumerate_dset`].
pub const ENUMERATION_BUDGET: u64 = 10_000_000;

/// `true` iff `f(x) ≡ 0 (mod d)` has a solution.
pub fn in_dset(f: &Polynomial, d: u64) -> Result<bool> {
    if d == 0 {
        return Err(domain("in_dset needs d >= 1"));
    }
    for (p, e) in factorize(d).factors {
        let pe = p.pow(e);
        if pe > BRUTE_FORCE_BUDGET {
            return Err(resource(format!("prime power {p}^{e} above scan budget")));
        }
        if !(0..pe).any(|x| f.eval_mod(x, pe) == 0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership flags for `[0, limit]`; index 0 is `false`.
pub fn dset_membership(f: &Polynomial, limit: u64) -> Result<Vec<bool>> {
    if limit > ENUMERATION_BUDGET {
        return Err(resource(format!("limit {limit} above enumeration budget {ENUMERATION_BUDGET}")));
    }
    let mut member = vec![false; limit as usize + 1];
    if limit == 0 {
        return Ok(member);
    }
    member[1] = true;
    if limit == 1 {
        return Ok(member);
    }
    let tables = ArithTables::new(limit)?;
    let max_exp: Vec<(u32, u32)> = tables
        .primes()
        .par_iter()
        .map(|&p| (p, max_solvable_exponent(f, p as u64, limit)))
        .collect();
    let mut cap = vec![0u32; limit as usize + 1];
    for (p, e) in max_exp {
        cap[p as usize] = e;
    }
    for d in 2..=limit {
        let p = tables.spf(d);
        let mut rest = d;
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        member[d as usize] = e <= cap[p as usize] && member[rest as usize];
    }
    Ok(member)
}

/// Sorted members of `D_f` in `[1, limit]`.
pub fn enumerate_dset(f: &Polynomial, limit: u64) -> Result<Vec<u64>> {
    let member = dset_membership(f, limit)?;
    Ok(member
        .iter()
        .enumerate()
        .filter(|(_, &m)| m)
        .map(|(d, _)| d as u64)
        .collect())
}

/// Largest `e` with `p^e <= limit` such that `f` has a root modulo `p^e`
/// (`u32::MAX` when a simple root exists, since it lifts to every power).
fn max_solvable_exponent(f: &Polynomial, p: u64, limit: u64) -> u32 {
    let fp = f.reduce_mod(p);
    if !fp.is_empty() && p > 64 {
        let g = roots_part(&fp, p);
        if g.len() <= 1 {
            return 0;
        }
        let dfp = derivative_mod(&fp, p);
        let h = poly_gcd(g.clone(), dfp, p);
        if h.len() < g.len() {
            return u32::MAX;
        }
    }
    lift_exponent(f, p, limit)
}

/// Brute-force roots mod `p`, then lift level by level while `p^e <= limit`.
fn lift_exponent(f: &Polynomial, p: u64, limit: u64) -> u32 {
    let mut roots: Vec<u64> = (0..p).filter(|&x| f.eval_mod(x, p) == 0).collect();
    if roots.is_empty() {
        return 0;
    }
    // A simple root lifts to every power.
    let df = f.derivative();
    if roots.iter().any(|&r| df.eval_mod(r, p) != 0) {
        return u32::MAX;
    }
    let mut e = 1u32;
    let mut pe = p;
    loop {
        let Some(next) = pe.checked_mul(p).filter(|&n| n <= limit) else {
            return e;
        };
        roots = roots
            .iter()
            .flat_map(|&r| (0..p).map(move |t| r + t * pe))
            .filter(|&x| f.eval_mod(x, next) == 0)
            .collect();
        if roots.is_empty() {
            return e;
        }
        e += 1;
        pe = next;
    }
}

// Dense polynomials over F_p, lowest degree first, trimmed.

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn poly_rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let inv = powmod(b[db], p - 2, p);
    while a.len() > db {
        let top = a.len() - 1;
        let coef = mulmod(a[top], inv, p);
        if coef != 0 {
            for (i, &bi) in b.iter().enumerate() {
                let idx = top - db + i;
                a[idx] = (a[idx] + p - mulmod(coef, bi, p)) % p;
            }
        }
        a.pop();
        a = trim(a);
    }
    a
}

fn poly_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    poly_rem(trim(out), m, p)
}

fn poly_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    while !b.is_empty() {
        let r = poly_rem(a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn derivative_mod(a: &[u64], p: u64) -> Vec<u64> {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| mulmod(c, i as u64 % p, p)).collect())
}

/// `gcd(x^p − x, f)` over `F_p`: the product of the distinct linear factors
/// of `f`. Its length minus one is the number of distinct roots.
fn roots_part(fp: &[u64], p: u64) -> Vec<u64> {
    if fp.len() == 1 {
        return fp.to_vec();
    }
    // x^p mod f by square-and-multiply on the exponent.
    let x = poly_rem(vec![0, 1], fp, p);
    let mut acc = poly_rem(vec![1], fp, p);
    let mut base = x.clone();
    let mut e = p;
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(&acc, &base, fp, p);
        }
        base = poly_mulmod(&base, &base, fp, p);
        e >>= 1;
    }
    // acc − x
    let mut diff = acc;
    if diff.len() < 2 {
        diff.resize(2, 0);
    }
    diff[1] = (diff[1] + p - 1) % p;
    let diff = trim(diff);
    poly_gcd(fp.to_vec(), diff, p)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityCheckpoint {
    pub x: u64,
    pub count: u64,
    pub ratio: f64,
}

/// Least-squares fit of `ratio ≈ C / (log x)^β`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayFit {
    pub beta: f64,
    pub constant: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DsetStats {
    pub limit: u64,
    pub count: u64,
    pub checkpoints: Vec<DensityCheckpoint>,
    /// `None` with fewer than two usable checkpoints (`x >= 3`, ratio > 0).
    pub decay: Option<DecayFit>,
}

/// Counts and densities of `D_f ∩ [1, x]` at each checkpoint.
pub fn dset_density(f: &Polynomial, limit: u64, checkpoints: &[u64]) -> Result<DsetStats> {
    if checkpoints.windows(2).any(|w| w[0] >= w[1]) {
        return Err(domain("checkpoints must be strictly ascending"));
    }
    if checkpoints.iter().any(|&x| x == 0 || x > limit) {
        return Err(domain(format!("checkpoints must lie in [1, {limit}]")));
    }
    let member = dset_membership(f, limit)?;
    let mut out = Vec::with_capacity(checkpoints.len());
    let mut running = 0u64;
    let mut next = checkpoints.iter().peekable();
    for (d, &m) in member.iter().enumerate().skip(1) {
        running += m as u64;
        while next.peek().is_some_and(|&&x| x == d as u64) {
            let x = *next.next().unwrap();
            out.push(DensityCheckpoint { x, count: running, ratio: running as f64 / x as f64 });
        }
    }
    Ok(DsetStats { limit, count: running, decay: fit_decay(&out), checkpoints: out })
}

fn fit_decay(points: &[DensityCheckpoint]) -> Option<DecayFit> {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .filter(|c| c.x >= 3 && c.ratio > 0.0)
        .map(|c| ((c.x as f64).ln().ln(), c.ratio.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if sxx == 0.0 {
        return None;
    }
    let slope = sxy / sxx;
    Some(DecayFit { beta: -slope, constant: (my - slope * mx).exp() })
}
