//! Elementary arithmetic: sieves, multiplicative functions, primality,
//! factorization, integer roots and fixed divisors.

mod poly;
mod primes;
mod sieve;

pub use poly::Polynomial;
pub use primes::{factorize, gcd, is_prime, mulmod, powmod, primes_up_to, Factorization};
pub use sieve::{mobius, sieve_range, ArithTables, DEFAULT_MAX_LIMIT};

use crate::error::{domain, Result};

/// `⌊n^(1/k)⌋` for `k ≥ 1`.
pub fn iroot_u128(n: u128, k: u32) -> u128 {
    assert!(k >= 1);
    if k == 1 || n < 2 {
        return n;
    }
    let pow_le = |r: u128| -> bool {
        let mut acc: u128 = 1;
        for _ in 0..k {
            match acc.checked_mul(r) {
                Some(v) if v <= n => acc = v,
                _ => return false,
            }
        }
        true
    };
    let mut r = (n as f64).powf(1.0 / k as f64) as u128;
    while r > 0 && !pow_le(r) {
        r -= 1;
    }
    while pow_le(r + 1) {
        r += 1;
    }
    r
}

pub fn iroot(n: u64, k: u32) -> u64 {
    iroot_u128(n as u128, k) as u64
}

/// Largest `m` with `m³ <= n`, exact at cube boundaries.
pub fn integer_cuberoot(n: u64) -> u64 {
    iroot(n, 3)
}

/// `⌊∛t⌋` for signed `t`.
pub fn cbrt_floor(t: i128) -> i128 {
    if t >= 0 {
        iroot_u128(t as u128, 3) as i128
    } else {
        let a = t.unsigned_abs();
        let r = iroot_u128(a, 3);
        if r * r * r == a {
            -(r as i128)
        } else {
            -(r as i128) - 1
        }
    }
}

/// `⌈∛t⌉` for signed `t`.
pub fn cbrt_ceil(t: i128) -> i128 {
    -cbrt_floor(-t)
}

/// Returns `(p, v)` when `n = p^v` with `p` prime and `v >= 1`.
///
/// Exact: primality of `n`, then integer `v`-th roots for every
/// `2 <= v <= log2 n`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    if is_prime(n) {
        return Some((n, 1));
    }
    let max_v = 63 - n.leading_zeros();
    (2..=max_v).find_map(|v| {
        let r = iroot(n, v);
        (r >= 2 && r.checked_pow(v) == Some(n) && is_prime(r)).then_some((r, v))
    })
}

/// `Λ(n)`: `log p` if `n` is a power of the prime `p`, else `0`.
///
/// Works for any 64-bit `n` without sieve tables.
pub fn von_mangoldt(n: u64) -> f64 {
    match prime_power(n) {
        Some((p, _)) => (p as f64).ln(),
        None => 0.0,
    }
}

/// `Λ(n)` recomputed as `−Σ_{d|n} μ(d) log d` over every divisor of `n`.
pub fn von_mangoldt_via_mobius(n: u64) -> Result<f64> {
    if n == 0 {
        return Err(domain("von Mangoldt of 0"));
    }
    let fact = factorize(n);
    let mut sum = 0.0;
    for (d, exps) in fact.divisors_with_exponents() {
        let mu = if exps.iter().any(|&e| e > 1) {
            0.0
        } else if exps.iter().filter(|&&e| e == 1).count() % 2 == 0 {
            1.0
        } else {
            -1.0
        };
        if mu != 0.0 {
            sum += mu * (d as f64).ln();
        }
    }
    Ok(0.0 - sum)
}

/// Euler's totient of `|n|`, with `φ(0) = 0`.
pub fn totient(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    factorize(n)
        .factors
        .iter()
        .fold(1, |acc, &(p, e)| acc * (p - 1) * p.pow(e - 1))
}

/// Sum of divisors, with `σ(0) = 0`.
pub fn sigma(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    factorize(n)
        .factors
        .iter()
        .fold(1, |acc, &(p, e)| acc * (p.pow(e + 1) - 1) / (p - 1))
}

/// Number of divisors, with `τ(0) = 0`.
pub fn tau(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    factorize(n).factors.iter().map(|&(_, e)| e as u64 + 1).product()
}

/// The fixed divisor `gcd(f(ℤ))`, computed as `gcd(f(0), …, f(deg f))`.
///
/// Newton's forward-difference expansion writes every value as
/// `f(n) = Σ_j C(n, j) Δ^j f(0)` with `j ≤ deg f`, and each `Δ^j f(0)` is an
/// integer combination of `f(0), …, f(j)`. So the gcd of those `deg f + 1`
/// values divides every `f(n)`; being itself a gcd of image values, it is
/// exactly the gcd of the whole image.
pub fn fixed_divisor(f: &Polynomial) -> Result<u64> {
    f.require_nonzero()?;
    if f.degree() == 0 {
        return Err(domain("fixed divisor needs degree >= 1"));
    }
    let mut g: u128 = 0;
    for x in 0..=f.degree() as i64 {
        let v = f.eval(x)?.unsigned_abs();
        g = gcd128(g, v);
    }
    u64::try_from(g).map_err(|_| crate::error::capacity("fixed divisor exceeds u64"))
}

fn gcd128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cuberoot_boundaries() {
        assert_eq!(integer_cuberoot(0), 0);
        assert_eq!(integer_cuberoot(124), 4);
        assert_eq!(integer_cuberoot(125), 5);
        assert_eq!(integer_cuberoot(u64::MAX), 2_642_245);
        for m in [1u64, 2, 999_999, 1_000_000, 2_642_245] {
            let c = m * m * m;
            assert_eq!(integer_cuberoot(c), m);
            assert_eq!(integer_cuberoot(c - 1), m - 1);
        }
    }

    #[test]
    fn signed_cube_roots() {
        assert_eq!(cbrt_floor(-8), -2);
        assert_eq!(cbrt_floor(-9), -3);
        assert_eq!(cbrt_floor(7), 1);
        assert_eq!(cbrt_ceil(7), 2);
        assert_eq!(cbrt_ceil(-7), -1);
        assert_eq!(cbrt_ceil(-8), -2);
        assert_eq!(cbrt_ceil(0), 0);
    }

    #[test]
    fn von_mangoldt_examples() {
        assert!((von_mangoldt(8) - 2f64.ln()).abs() < 1e-15);
        assert_eq!(von_mangoldt(6), 0.0);
        assert!((von_mangoldt(127) - 127f64.ln()).abs() < 1e-15);
        assert_eq!(von_mangoldt(1), 0.0);
        assert!((von_mangoldt(1 << 62) - 2f64.ln()).abs() < 1e-15);
        assert_eq!(prime_power(3u64.pow(40)), Some((3, 40)));
        assert_eq!(prime_power(4_294_967_291u64 * 4_294_967_291), Some((4_294_967_291, 2)));
    }

    #[test]
    fn via_mobius_examples() {
        assert_eq!(von_mangoldt_via_mobius(1).unwrap(), 0.0);
        assert!((von_mangoldt_via_mobius(9).unwrap() - 3f64.ln()).abs() < 1e-12);
        assert!(von_mangoldt_via_mobius(12).unwrap().abs() < 1e-12);
        assert!(von_mangoldt_via_mobius(0).is_err());
    }

    #[test]
    fn multiplicative_weights() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(36), 12);
        assert_eq!(sigma(12), 28);
        assert_eq!(tau(12), 6);
        assert_eq!(tau(1), 1);
        assert_eq!(tau(0), 0);
    }

    #[test]
    fn fixed_divisor_examples() {
        assert_eq!(fixed_divisor(&Polynomial::from_high(&[1, 1, 2])), Ok(2));
        assert_eq!(fixed_divisor(&Polynomial::cubic_family(2)), Ok(1));
        assert_eq!(fixed_divisor(&Polynomial::from_high(&[1, 3, 2, 3])), Ok(3));
        // x^5 - x + 5
        assert_eq!(fixed_divisor(&Polynomial::from_high(&[1, 0, 0, 0, -1, 5])), Ok(5));
        assert_eq!(fixed_divisor(&Polynomial::from_high(&[1, 0, 1])), Ok(1));
        assert!(fixed_divisor(&Polynomial::zero()).is_err());
    }
}
