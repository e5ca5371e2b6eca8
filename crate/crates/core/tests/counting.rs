//! Dual-method check of the cubic prime count: a seeded 1% sample of
//! n <= 10^4 is re-tested by trial division.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cubic_primes::counting::enumerate_cubic_primes;

fn trial_is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[test]
fn sample_up_to_1e12_matches_trial_division() {
    let primes: std::collections::HashSet<i64> =
        enumerate_cubic_primes(2, 10_000).unwrap().into_iter().map(|(n, _)| n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let n: i64 = rng.gen_range(1..=10_000);
        let v = (n * n * n + 2) as u64;
        assert_eq!(primes.contains(&n), trial_is_prime(v), "n = {n}");
    }
    // Every listed n must be prime; small ones checked exhaustively.
    for n in 0..=300i64 {
        assert_eq!(primes.contains(&n), trial_is_prime((n * n * n + 2) as u64), "n = {n}");
    }
}
