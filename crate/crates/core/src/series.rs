//! Dirichlet partial sums supported on `D_f`, and Epstein zeta partial sums.
//!
//! Nothing here asserts a limit. The `D_f`-restricted sum
//! `Σ_{n <= x, n ∈ D_f} μ(n) log n / n^s` is reported as a trajectory, and
//! its apparent limit is summarised by a fixed rule (see [`kappa_trajectory`]).

use crate::arith::{ArithTables, Polynomial};
use crate::dset::dset_membership;
use crate::error::{domain, resource, Result};
use crate::residues::QuadraticForm;

/// Largest `x` or `n_max` accepted by the sums in this module.
pub const SERIES_BUDGET: u64 = 10_000_000;

/// Running value of a partial sum at checkpoint `x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartialSumRecord {
    pub x: u64,
    pub value: f64,
    /// Members `n <= x` of `D_f` with `μ(n) != 0`, i.e. the terms that entered the sum.
    pub terms_used: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct KappaTrajectory {
    pub records: Vec<PartialSumRecord>,
    pub fitted_kappa: Option<f64>,
    pub fit_residual: f64,
}

fn check_budget(x: u64) -> Result<()> {
    if x > SERIES_BUDGET {
        Err(resource(format!("{x} above series budget {SERIES_BUDGET}")))
    } else {
        Ok(())
    }
}

#[inline]
fn inv_pow(n: f64, s: f64) -> f64 {
    if s == 1.0 {
        1.0 / n
    } else {
        n.powf(-s)
    }
}

/// Möbius values and `D_f` membership over `[1, x]`.
struct DirichletTerms {
    member: Vec<bool>,
    mu: Option<ArithTables>,
}

impl DirichletTerms {
    fn new(f: &Polynomial, x: u64) -> Result<Self> {
        check_budget(x)?;
        let member = dset_membership(f, x)?;
        let mu = if x >= 2 { Some(ArithTables::new(x)?) } else { None };
        Ok(Self { member, mu })
    }

    fn mu(&self, n: u64) -> i8 {
        match &self.mu {
            Some(t) => t.mu(n),
            None => 1,
        }
    }

    /// `Some(term)` when `n` contributes, `None` when `n ∉ D_f` or `μ(n) = 0`.
    fn term(&self, n: u64, s: f64) -> Option<f64> {
        if !self.member[n as usize] {
            return None;
        }
        match self.mu(n) {
            0 => None,
            m => Some(m as f64 * (n as f64).ln() * inv_pow(n as f64, s)),
        }
    }
}

fn check_s(s: f64) -> Result<()> {
    if s.is_finite() && s >= 1.0 {
        Ok(())
    } else {
        Err(domain(format!("s = {s}; the Dirichlet sums need real s >= 1")))
    }
}

/// `Σ_{n <= c, n ∈ D_f} μ(n) log n / n^s` at each checkpoint `c`
/// (ascending, `<= x`; empty means just `x`).
pub fn dirichlet_partial_sum(
    f: &Polynomial,
    s: f64,
    x: u64,
    checkpoints: &[u64],
) -> Result<Vec<PartialSumRecord>> {
    check_s(s)?;
    if x == 0 {
        return Err(domain("x must be >= 1"));
    }
    let owned;
    let checkpoints = if checkpoints.is_empty() {
        owned = [x];
        &owned[..]
    } else {
        checkpoints
    };
    if checkpoints.windows(2).any(|w| w[0] >= w[1]) || checkpoints.iter().any(|&c| c == 0 || c > x) {
        return Err(domain(format!("checkpoints must be strictly ascending within [1, {x}]")));
    }
    let terms = DirichletTerms::new(f, x)?;
    let mut out = Vec::with_capacity(checkpoints.len());
    let mut value = 0.0;
    let mut used = 0u64;
    let mut next = 0usize;
    for n in 1..=x {
        if let Some(t) = terms.term(n, s) {
            value += t;
            used += 1;
        }
        if checkpoints[next] == n {
            out.push(PartialSumRecord { x: n, value, terms_used: used });
            next += 1;
            if next == checkpoints.len() {
                break;
            }
        }
    }
    Ok(out)
}

/// The same sum restricted to `lo <= n <= hi`.
pub fn dirichlet_range_sum(f: &Polynomial, s: f64, lo: u64, hi: u64) -> Result<f64> {
    check_s(s)?;
    if lo == 0 || hi < lo {
        return Err(domain(format!("bad range [{lo}, {hi}]")));
    }
    let terms = DirichletTerms::new(f, hi)?;
    Ok((lo..=hi).filter_map(|n| terms.term(n, s)).sum())
}

/// Checkpoints `10, 100, …` below `x_max`, then `x_max` itself.
pub fn decade_checkpoints(x_max: u64) -> Vec<u64> {
    let mut out: Vec<u64> = std::iter::successors(Some(10u64), |&c| c.checked_mul(10))
        .take_while(|&c| c < x_max)
        .collect();
    out.push(x_max);
    out
}

/// Trajectory of the `s = 1` sum over decade checkpoints.
///
/// Fitting rule: `fitted_kappa` is minus the mean of the last quarter of the
/// records (at least one record), `fit_residual` the largest absolute
/// deviation from that mean within the same records.
pub fn kappa_trajectory(f: &Polynomial, x_max: u64) -> Result<KappaTrajectory> {
    let records = dirichlet_partial_sum(f, 1.0, x_max, &decade_checkpoints(x_max))?;
    let (fitted_kappa, fit_residual) = fit_last_quartile(&records);
    Ok(KappaTrajectory { records, fitted_kappa, fit_residual })
}

/// `(−mean, max |deviation|)` over the last quarter of `records` (at least
/// one record). `(None, 0)` for an empty slice.
pub fn fit_last_quartile(records: &[PartialSumRecord]) -> (Option<f64>, f64) {
    if records.is_empty() {
        return (None, 0.0);
    }
    let tail = records.len().div_ceil(4).max(1);
    let last = &records[records.len() - tail..];
    let mean = last.iter().map(|r| r.value).sum::<f64>() / tail as f64;
    let residual = last.iter().map(|r| (r.value - mean).abs()).fold(0.0, f64::max);
    (mean.is_finite().then_some(-mean), residual)
}

/// `r_Q(n)`: lattice points with `Q(x, y) = n`, all signs.
pub fn epstein_r(q: &QuadraticForm, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(domain("epstein_r needs n >= 1"));
    }
    Ok(q.count_representations(n))
}

fn check_epstein(s: f64, n_max: u64) -> Result<()> {
    if !(s.is_finite() && s > 1.0) {
        return Err(domain(format!("s = {s}; Epstein partial sums need s > 1")));
    }
    check_budget(n_max)
}

/// Integer `x` range with `Q(x, y) <= n_max` for fixed `y`, if non-empty.
fn x_range(q: &QuadraticForm, y: i64, n_max: u64) -> Option<(i64, i64)> {
    let (a, b, c) = q.coefficients();
    let (a, b, c, y) = (a as f64, b as f64, c as f64, y as f64);
    let disc = b * b * y * y - 4.0 * a * (c * y * y - n_max as f64);
    if disc < 0.0 {
        return None;
    }
    let sq = disc.sqrt();
    let mut lo = ((-b * y - sq) / (2.0 * a)).floor() as i64 - 1;
    let mut hi = ((-b * y + sq) / (2.0 * a)).ceil() as i64 + 1;
    let yi = y as i64;
    while lo <= hi && q.eval(lo, yi) > n_max as i128 {
        lo += 1;
    }
    while hi >= lo && q.eval(hi, yi) > n_max as i128 {
        hi -= 1;
    }
    (lo <= hi).then_some((lo, hi))
}

/// `Σ_{n <= n_max} r_Q(n) / n^s`, summed directly over the lattice points
/// of the ellipse `0 < Q(x, y) <= n_max`.
pub fn epstein_zeta_partial(q: &QuadraticForm, s: f64, n_max: u64) -> Result<f64> {
    check_epstein(s, n_max)?;
    let ymax = q.y_bound(n_max);
    let mut total = 0.0;
    for y in -ymax..=ymax {
        if let Some((lo, hi)) = x_range(q, y, n_max) {
            for x in lo..=hi {
                let v = q.eval(x, y);
                if v > 0 {
                    total += inv_pow(v as f64, s);
                }
            }
        }
    }
    Ok(total)
}

/// Same sum, evaluated one `n` at a time from `r_Q(n)`.
pub fn epstein_zeta_partial_per_n(q: &QuadraticForm, s: f64, n_max: u64) -> Result<f64> {
    check_epstein(s, n_max)?;
    Ok((1..=n_max)
        .map(|n| q.count_representations(n) as f64 * inv_pow(n as f64, s))
        .sum())
}

/// `Σ_{n <= n_max} μ(n) r_Q(n) / n^s`, the partial sums of `1/ζ_Q`-type series.
pub fn epstein_mu_sum(q: &QuadraticForm, s: f64, n_max: u64) -> Result<f64> {
    if !(s.is_finite() && s >= 1.0) {
        return Err(domain(format!("s = {s}; need s >= 1")));
    }
    check_budget(n_max)?;
    if n_max == 0 {
        return Ok(0.0);
    }
    let mut r = vec![0u64; n_max as usize + 1];
    let ymax = q.y_bound(n_max);
    for y in -ymax..=ymax {
        if let Some((lo, hi)) = x_range(q, y, n_max) {
            for x in lo..=hi {
                let v = q.eval(x, y);
                if v > 0 {
                    r[v as usize] += 1;
                }
            }
        }
    }
    let tables = if n_max >= 2 { Some(ArithTables::new(n_max)?) } else { None };
    let mut total = 0.0;
    for n in 1..=n_max {
        let mu = tables.as_ref().map_or(1, |t| t.mu(n));
        if mu != 0 && r[n as usize] != 0 {
            total += mu as f64 * r[n as usize] as f64 * inv_pow(n as f64, s);
        }
    }
    Ok(total)
}
