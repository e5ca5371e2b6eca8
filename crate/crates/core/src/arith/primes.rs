//! Deterministic 64-bit primality and complete factorization.

use std::sync::OnceLock;

#[inline]
pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Odd-only sieve of Eratosthenes; all primes `<= n` in ascending order.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let half = ((n - 1) / 2) as usize; // index i <-> 2i + 1
    let mut composite = vec![false; half + 1];
    let mut out = vec![2];
    let mut i = 1usize;
    while i <= half {
        if !composite[i] {
            let p = 2 * i as u64 + 1;
            out.push(p);
            let mut j = (p * p / 2) as usize;
            while j <= half {
                composite[j] = true;
                j += p as usize;
            }
        }
        i += 1;
    }
    out
}

const TRIAL_BOUND: u64 = 1 << 12;

fn small_primes() -> &'static [u64] {
    static SMALL: OnceLock<Vec<u64>> = OnceLock::new();
    SMALL.get_or_init(|| primes_up_to(TRIAL_BOUND))
}

// Sinclair's base set: deterministic for every n < 2^64.
const MR_BASES: [u64; 7] = [2, 325, 9375, 28178, 450775, 9780504, 1795265022];

fn strong_probable_prime(n: u64, d: u64, s: u32, a: u64) -> bool {
    let a = a % n;
    if a == 0 {
        return true;
    }
    let mut x = powmod(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mulmod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// Deterministic primality for every 64-bit input.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &small_primes()[..16] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    if n < 59 * 59 {
        return true;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    MR_BASES.iter().all(|&a| strong_probable_prime(n, d, s, a))
}

/// Prime factorization `n = Π p^e`, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub n: u64,
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn mobius(&self) -> i8 {
        if !self.is_squarefree() {
            0
        } else if self.factors.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Multiplies the factors back together; `None` on overflow.
    pub fn product(&self) -> Option<u64> {
        self.factors.iter().try_fold(1u64, |acc, &(p, e)| {
            p.checked_pow(e).and_then(|pe| acc.checked_mul(pe))
        })
    }

    /// Every divisor together with its exponent vector, unordered.
    pub fn divisors_with_exponents(&self) -> Vec<(u64, Vec<u32>)> {
        let mut out = vec![(1u64, vec![0u32; self.factors.len()])];
        for (i, &(p, e)) in self.factors.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
            for (d, exps) in &out {
                let mut pk = 1u64;
                for k in 0..=e {
                    let mut ex = exps.clone();
                    ex[i] = k;
                    next.push((d * pk, ex));
                    pk = pk.saturating_mul(p);
                }
            }
            out = next;
        }
        out
    }

    pub fn divisors(&self) -> Vec<u64> {
        let mut d: Vec<u64> = self.divisors_with_exponents().into_iter().map(|(d, _)| d).collect();
        d.sort_unstable();
        d
    }
}

/// Complete factorization: trial division by the primes below 4096, then
/// Brent's variant of Pollard rho on the cofactor, with every reported factor
/// certified by [`is_prime`].
pub fn factorize(n: u64) -> Factorization {
    let mut factors = Vec::new();
    let mut m = n;
    if n == 0 {
        return Factorization { n, factors };
    }
    for &p in small_primes() {
        if p * p > m {
            break;
        }
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            factors.push((p, e));
        }
    }
    if m > 1 {
        let mut big = Vec::new();
        split_into_primes(m, &mut big);
        big.sort_unstable();
        for p in big {
            match factors.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => factors.push((p, 1)),
            }
        }
    }
    Factorization { n, factors }
}

fn split_into_primes(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let r = crate::arith::iroot(n, 2);
    if r * r == n {
        split_into_primes(r, out);
        split_into_primes(r, out);
        return;
    }
    let d = pollard_brent(n);
    split_into_primes(d, out);
    split_into_primes(n / d, out);
}

/// Nontrivial factor of an odd composite `n`.
fn pollard_brent(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    const BATCH: u64 = 128;
    for c in 1u64.. {
        let f = |x: u64| ((x as u128 * x as u128 + c as u128) % n as u128) as u64;
        let mut y = 2u64;
        let mut x = y;
        let mut ys = y;
        let mut q = 1u64;
        let mut g = 1u64;
        let mut r = 1u64;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y);
                    q = mulmod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!()
}
