//! Invariant suites behind `verify`.
//!
//! Each property reports how many cases it checked, how many failed and the
//! first counterexample. Sampling uses ChaCha8 seeded from `sample_seed`, so
//! a run is reproducible from its arguments alone.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::{factorize, gcd, von_mangoldt, von_mangoldt_via_mobius, Polynomial};
use crate::counting::{lambda_sum_rhs, progression_weighted_sum, weighted_lambda_sum, Weight};
use crate::residues::{classify_primes, rho, rho_bruteforce};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Lemma2,
    Lemma3,
    Lemma4,
    Rho,
    Eq3,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Scale {
    Tiny,
    Full,
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub scale: Scale,
    /// Overrides the prime bound of the `lemma3` suite.
    pub pmax: Option<u64>,
    /// Overrides the `n` / `q` bound of the `lemma2` and `rho` suites.
    pub nmax: Option<u64>,
    pub sample_seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { scale: Scale::Full, pmax: None, nmax: None, sample_seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyOutcome {
    pub suite: &'static str,
    pub property: &'static str,
    pub checked: u64,
    pub failures: u64,
    pub counterexample: Option<String>,
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

struct Tally {
    suite: &'static str,
    property: &'static str,
    checked: u64,
    failures: u64,
    counterexample: Option<String>,
}

impl Tally {
    fn new(suite: &'static str, property: &'static str) -> Self {
        Self { suite, property, checked: 0, failures: 0, counterexample: None }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(describe());
            }
        }
    }

    fn done(self) -> PropertyOutcome {
        PropertyOutcome {
            suite: self.suite,
            property: self.property,
            checked: self.checked,
            failures: self.failures,
            counterexample: self.counterexample,
        }
    }
}

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Vec<PropertyOutcome> {
    match suite {
        Suite::Lemma2 => lemma2(cfg),
        Suite::Lemma3 => lemma3(cfg),
        Suite::Lemma4 => lemma4(cfg),
        Suite::Rho => rho_suite(cfg),
        Suite::Eq3 => eq3(cfg),
        Suite::All => [Suite::Lemma2, Suite::Lemma3, Suite::Lemma4, Suite::Rho, Suite::Eq3]
            .into_iter()
            .flat_map(|s| run_suite(s, cfg))
            .collect(),
    }
}

fn lemma2(cfg: &VerifyConfig) -> Vec<PropertyOutcome> {
    let nmax = cfg.nmax.unwrap_or(match cfg.scale {
        Scale::Tiny => 10_000,
        Scale::Full => 100_000,
    });
    let mut inversion = Tally::new("lemma2", "lambda_equals_minus_sum_mu_log");
    let pairs: Vec<(u64, f64, f64)> = (1..=nmax)
        .into_par_iter()
        .map(|n| (n, von_mangoldt(n), von_mangoldt_via_mobius(n).unwrap_or(f64::NAN)))
        .collect();
    for &(n, a, b) in &pairs {
        inversion.check(rel_close(a, b, 1e-9), || format!("n = {n}: Λ = {a}, −Σμ log d = {b}"));
    }
    let mut divisor_sum = Tally::new("lemma2", "sum_lambda_over_divisors_is_log");
    let mut acc = vec![0.0f64; nmax as usize + 1];
    for &(d, lambda, _) in &pairs {
        if lambda != 0.0 {
            for m in (d..=nmax).step_by(d as usize) {
                acc[m as usize] += lambda;
            }
        }
    }
    for n in 1..=nmax {
        let want = (n as f64).ln();
        divisor_sum.check(rel_close(acc[n as usize], want, 1e-9), || {
            format!("n = {n}: Σ Λ(d) = {}, log n = {want}", acc[n as usize])
        });
    }
    vec![inversion.done(), divisor_sum.done()]
}

fn lemma3(cfg: &VerifyConfig) -> Vec<PropertyOutcome> {
    let pmax = cfg.pmax.unwrap_or(match cfg.scale {
        Scale::Tiny => 10_000,
        Scale::Full => 1_000_000,
    });
    let mut t = Tally::new("lemma3", "euler_criterion_matches_form_representation");
    for r in classify_primes(pmax) {
        match r {
            Ok(_) => t.check(true, String::new),
            Err(e) => t.check(false, || e.to_string()),
        }
    }
    vec![t.done()]
}

fn lemma4(cfg: &VerifyConfig) -> Vec<PropertyOutcome> {
    let instances = match cfg.scale {
        Scale::Tiny => 50,
        Scale::Full => 200,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.sample_seed);
    let mut exact = Tally::new("lemma4", "exact_equals_corrected_closed_form");
    let mut leading = Tally::new("lemma4", "exact_over_leading_within_5pct_when_x_ge_100q");
    let mut drawn = 0;
    while drawn < instances {
        let q = rng.gen_range(1..=1000u64);
        let x = rng.gen_range(1..=100_000u64);
        if !factorize(q).is_squarefree() || rho(2, q).unwrap_or(0) == 0 {
            continue;
        }
        drawn += 1;
        match progression_weighted_sum(q, -2, x) {
            Ok(s) => {
                exact.check(s.exact == s.closed_form, || {
                    format!("q = {q}, x = {x}: exact {} vs closed form {}", s.exact, s.closed_form)
                });
                if x >= 100 * q {
                    let r = s.exact as f64 / s.leading;
                    leading.check((0.95..=1.05).contains(&r), || format!("q = {q}, x = {x}: ratio {r}"));
                }
            }
            Err(e) => exact.check(false, || e.to_string()),
        }
    }
    let mut uncorrected = Tally::new("lemma4", "uncorrected_form_misses_first_term");
    match progression_weighted_sum(5, -2, 20) {
        Ok(s) => uncorrected.check(s.uncorrected_form == 36 && s.exact == 38, || {
            format!("q = 5, x = 20: uncorrected {} exact {}", s.uncorrected_form, s.exact)
        }),
        Err(e) => uncorrected.check(false, || e.to_string()),
    }
    vec![exact.done(), leading.done(), uncorrected.done()]
}

fn rho_suite(cfg: &VerifyConfig) -> Vec<PropertyOutcome> {
    let (nmax, pair_bound) = match cfg.scale {
        Scale::Tiny => (cfg.nmax.unwrap_or(1_000), 100),
        Scale::Full => (cfg.nmax.unwrap_or(10_000), 1_000),
    };
    let f = Polynomial::cubic_family(2);
    let mut formula = Tally::new("rho", "product_formula_matches_root_scan");
    let squarefree: Vec<u64> = (1..=nmax).filter(|&q| factorize(q).is_squarefree()).collect();
    let results: Vec<(u64, Option<u64>, Option<u64>)> = squarefree
        .par_iter()
        .map(|&q| (q, rho(2, q).ok(), rho_bruteforce(&f, q).ok()))
        .collect();
    for (q, a, b) in results {
        formula.check(a.is_some() && a == b, || format!("q = {q}: formula {a:?}, scan {b:?}"));
    }
    let mut mult = Tally::new("rho", "multiplicative_on_coprime_squarefree");
    let small: Vec<u64> = squarefree.iter().copied().filter(|&q| q <= pair_bound).collect();
    for (i, &a) in small.iter().enumerate() {
        for &b in &small[i + 1..] {
            if gcd(a, b) != 1 {
                continue;
            }
            let (ra, rb, rab) = (rho(2, a), rho(2, b), rho(2, a * b));
            mult.check(matches!((&ra, &rb, &rab), (Ok(x), Ok(y), Ok(z)) if x * y == *z), || {
                format!("q1 = {a}, q2 = {b}: {ra:?} * {rb:?} vs {rab:?}")
            });
        }
    }
    vec![formula.done(), mult.done()]
}

fn eq3(cfg: &VerifyConfig) -> Vec<PropertyOutcome> {
    let xs: &[u64] = match cfg.scale {
        Scale::Tiny => &[100, 1_000],
        Scale::Full => &[100, 1_000, 10_000],
    };
    let f = Polynomial::cubic_family(2);
    let mut t = Tally::new("eq3", "weighted_lambda_sum_equals_divisor_expansion");
    for &x in xs {
        let lhs = weighted_lambda_sum(&f, Weight::Power(1), x).map(|r| r.value);
        let rhs = lambda_sum_rhs(2, x);
        t.check(matches!((&lhs, &rhs), (Ok(a), Ok(b)) if rel_close(*a, *b, 1e-6)), || {
            format!("x = {x}: lhs {lhs:?}, rhs {rhs:?}")
        });
    }
    vec![t.done()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_suites_pass() {
        let cfg = VerifyConfig { scale: Scale::Tiny, ..Default::default() };
        let out = run_suite(Suite::All, &cfg);
        assert_eq!(out.len(), 9);
        for o in &out {
            assert!(o.passed(), "{o:?}");
            assert!(o.checked > 0, "{o:?}");
        }
    }
}
