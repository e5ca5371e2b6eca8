use crate::arith::primes::Factorization;
use crate::error::{capacity, domain, Result};

/// Default upper bound accepted by [`sieve_range`]; roughly 5 GB of tables.
pub const DEFAULT_MAX_LIMIT: u64 = 1_000_000_000;

/// Smallest-prime-factor and Möbius tables over `[1, limit]`.
///
/// Built once by a linear sieve, immutable afterwards, and `Sync`, so batch
/// paths can share one instance across threads.
#[derive(Debug, Clone)]
pub struct ArithTables {
    limit: u64,
    spf: Vec<u32>,
    mu: Vec<i8>,
    primes: Vec<u32>,
}

/// Sieves `[1, limit]` with the default capacity guard.
pub fn sieve_range(limit: u64) -> Result<ArithTables> {
    ArithTables::with_max(limit, DEFAULT_MAX_LIMIT)
}

impl ArithTables {
    pub fn new(limit: u64) -> Result<Self> {
        sieve_range(limit)
    }

    pub fn with_max(limit: u64, max_limit: u64) -> Result<Self> {
        if limit < 2 {
            return Err(capacity(format!("sieve limit {limit} below 2")));
        }
        if limit > max_limit.min(u32::MAX as u64) {
            return Err(capacity(format!("sieve limit {limit} above {max_limit}")));
        }
        let n = limit as usize;
        let mut spf = vec![0u32; n + 1];
        let mut mu = vec![0i8; n + 1];
        let mut primes: Vec<u32> = Vec::with_capacity(estimate_pi(limit));
        mu[1] = 1;
        for i in 2..=n {
            if spf[i] == 0 {
                spf[i] = i as u32;
                mu[i] = -1;
                primes.push(i as u32);
            }
            let si = spf[i];
            for &p in &primes {
                if p > si {
                    break;
                }
                let j = i * p as usize;
                if j > n {
                    break;
                }
                spf[j] = p;
                mu[j] = if p == si { 0 } else { -mu[i] };
            }
        }
        Ok(Self { limit, spf, mu, primes })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u32] {
        &self.primes
    }

    pub fn is_prime(&self, n: u64) -> bool {
        n >= 2 && n <= self.limit && self.spf[n as usize] as u64 == n
    }

    /// Smallest prime factor, `0` for `n < 2`. Panics above the limit.
    pub fn spf(&self, n: u64) -> u64 {
        self.spf[n as usize] as u64
    }

    /// Unchecked Möbius lookup; panics above the limit.
    #[inline]
    pub fn mu(&self, n: u64) -> i8 {
        self.mu[n as usize]
    }

    pub fn mu_table(&self) -> &[i8] {
        &self.mu
    }

    pub fn factor(&self, n: u64) -> Result<Factorization> {
        self.check(n)?;
        let mut factors: Vec<(u64, u32)> = Vec::new();
        let mut m = n;
        while m > 1 {
            let p = self.spf(m);
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        Ok(Factorization { n, factors })
    }

    fn check(&self, n: u64) -> Result<()> {
        if n == 0 || n > self.limit {
            Err(domain(format!("{n} outside [1, {}]", self.limit)))
        } else {
            Ok(())
        }
    }
}

fn estimate_pi(n: u64) -> usize {
    let x = n as f64;
    (1.26 * x / x.ln().max(1.0)) as usize + 16
}

/// `μ(n)` from the sieve tables.
pub fn mobius(n: u64, tables: &ArithTables) -> Result<i8> {
    tables.check(n)?;
    Ok(tables.mu(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_tables() {
        let t = sieve_range(10).unwrap();
        assert_eq!(t.primes(), &[2, 3, 5, 7]);
        assert_eq!(t.mu(6), 1);
        assert_eq!(t.mu(4), 0);
        assert_eq!(mobius(1, &t), Ok(1));
        assert_eq!(mobius(10, &t), Ok(1));
        assert!(mobius(0, &t).is_err());
        assert!(mobius(11, &t).is_err());
    }

    #[test]
    fn mobius_examples() {
        let t = sieve_range(100).unwrap();
        assert_eq!(mobius(30, &t), Ok(-1));
        assert_eq!(mobius(12, &t), Ok(0));
    }

    #[test]
    fn limits_guarded() {
        assert!(matches!(sieve_range(1), Err(crate::Error::Capacity(_))));
        assert!(matches!(ArithTables::with_max(1000, 999), Err(crate::Error::Capacity(_))));
    }

    #[test]
    fn invariants_against_spf() {
        let t = sieve_range(50_000).unwrap();
        for n in 2..=50_000u64 {
            let p = t.spf(n);
            assert_eq!(n % p, 0);
            assert_eq!(t.spf(p), p);
            let f = t.factor(n).unwrap();
            assert_eq!(f.product(), Some(n));
            assert_eq!(t.mu(n), f.mobius());
            assert_eq!(t.is_prime(n), p == n);
        }
        assert!(t.primes().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn prime_count_one_million() {
        // independent count by trial division against the primes below 1000
        let small: Vec<u64> = (2..1000u64).filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)).collect();
        let oracle = (2..=1_000_000u64)
            .filter(|&n| small.iter().take_while(|&&p| p * p <= n).all(|&p| n % p != 0))
            .count();
        assert_eq!(oracle, 78_498);
        assert_eq!(sieve_range(1_000_000).unwrap().primes().len(), oracle);
    }
}
