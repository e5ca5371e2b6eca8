use proptest::prelude::*;

use cubic_primes::arith::{factorize, fixed_divisor, gcd, is_prime};
use cubic_primes::dset::in_dset;
use cubic_primes::residues::{rho, QuadraticForm};
use cubic_primes::series::epstein_r;
use cubic_primes::Polynomial;

fn squarefree(n: u64) -> bool {
    factorize(n).is_squarefree()
}

proptest! {
    #[test]
    fn factorization_reassembles(n in 1u64..) {
        let f = factorize(n);
        prop_assert_eq!(f.product(), Some(n));
        for &(p, e) in &f.factors {
            prop_assert!(is_prime(p));
            prop_assert!(e >= 1);
        }
        prop_assert!(f.factors.windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn mobius_is_multiplicative(a in 1u64..100_000, b in 1u64..100_000) {
        prop_assume!(gcd(a, b) == 1);
        let m = |n: u64| factorize(n).mobius() as i32;
        prop_assert_eq!(m(a * b), m(a) * m(b));
    }

    #[test]
    fn fixed_divisor_divides_values(coeffs in prop::collection::vec(-50i64..50, 2..6), n in -1000i64..1000) {
        let f = Polynomial::from_low(coeffs);
        prop_assume!(f.degree() >= 1);
        let d = fixed_divisor(&f).unwrap();
        prop_assert!(d >= 1);
        prop_assert_eq!(f.eval(n).unwrap() % d as i128, 0);
    }

    #[test]
    fn rho_is_multiplicative(k in -50i64..50, a in 1u64..300, b in 1u64..300) {
        prop_assume!(k != 0 && gcd(a, b) == 1 && squarefree(a) && squarefree(b));
        prop_assert_eq!(rho(k, a * b).unwrap(), rho(k, a).unwrap() * rho(k, b).unwrap());
    }

    #[test]
    fn representation_counts_are_even(n in 1u64..20_000, which in 0usize..3) {
        let q = [QuadraticForm::SUM_OF_SQUARES, QuadraticForm::RESIDUE_FORM, QuadraticForm::NONRESIDUE_FORM][which];
        // (x, y) and (-x, -y) pair up.
        prop_assert_eq!(epstein_r(&q, n).unwrap() % 2, 0);
    }

    #[test]
    fn divisor_support_closed_under_coprime_products(k in -20i64..20, a in 1u64..400, b in 1u64..400) {
        prop_assume!(k != 0 && gcd(a, b) == 1);
        let f = Polynomial::cubic_family(k);
        let (ia, ib) = (in_dset(&f, a).unwrap(), in_dset(&f, b).unwrap());
        prop_assert_eq!(in_dset(&f, a * b).unwrap(), ia && ib);
    }

    #[test]
    fn divisor_support_closed_under_divisors(k in -20i64..20, d in 1u64..5_000) {
        prop_assume!(k != 0);
        let f = Polynomial::cubic_family(k);
        if in_dset(&f, d).unwrap() {
            for e in factorize(d).divisors() {
                prop_assert!(in_dset(&f, e).unwrap());
            }
        }
    }
}
