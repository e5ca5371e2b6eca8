//! Cubic residuacity modulo rational primes and the root-count function `ρ`.
//!
//! For `p ≡ 2 (mod 3)` and `p = 3` cubing is a bijection on `(ℤ/p)^×`, so
//! every unit is a cube. For `p ≡ 1 (mod 3)` the cubes form an index-3
//! subgroup and `a^((p−1)/3)` lands on one of the three cube roots of unity;
//! the exponent of that root relative to a fixed primitive root of unity is
//! the rational shadow of the cubic residue symbol.
//!
//! Whether 2 is a cube modulo such a `p` is decided independently by which of
//! the two reduced forms of discriminant −108, `x² + 27y²` or
//! `4x² + 2xy + 7y²`, represents `p`. [`gauss_classify`] computes both and
//! refuses to answer if they disagree.

use rayon::prelude::*;

use crate::arith::{factorize, gcd, iroot_u128, is_prime, powmod, primes_up_to, Polynomial};
use crate::error::{domain, resource, Error, Result};

/// Positive definite primitive binary quadratic form `ax² + bxy + cy²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadraticForm {
    a: i64,
    b: i64,
    c: i64,
}

impl QuadraticForm {
    /// `x² + 27y²`: represents the primes `p ≡ 1 (mod 3)` modulo which 2 is a cube.
    pub const RESIDUE_FORM: QuadraticForm = QuadraticForm { a: 1, b: 0, c: 27 };
    /// `4x² + 2xy + 7y²`: represents the remaining primes `p ≡ 1 (mod 3)`.
    pub const NONRESIDUE_FORM: QuadraticForm = QuadraticForm { a: 4, b: 2, c: 7 };
    /// `x² + y²`.
    pub const SUM_OF_SQUARES: QuadraticForm = QuadraticForm { a: 1, b: 0, c: 1 };

    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        let disc = b as i128 * b as i128 - 4 * a as i128 * c as i128;
        if a <= 0 || disc >= 0 {
            return Err(domain(format!(
                "form ({a}, {b}, {c}) is not positive definite (discriminant {disc})"
            )));
        }
        let g = gcd(gcd(a.unsigned_abs(), b.unsigned_abs()), c.unsigned_abs());
        if g != 1 {
            return Err(domain(format!("form ({a}, {b}, {c}) is not primitive")));
        }
        Ok(Self { a, b, c })
    }

    pub fn coefficients(&self) -> (i64, i64, i64) {
        (self.a, self.b, self.c)
    }

    /// `b² − 4ac`, always negative.
    pub fn discriminant(&self) -> i128 {
        self.b as i128 * self.b as i128 - 4 * self.a as i128 * self.c as i128
    }

    pub fn eval(&self, x: i64, y: i64) -> i128 {
        let (x, y) = (x as i128, y as i128);
        self.a as i128 * x * x + self.b as i128 * x * y + self.c as i128 * y * y
    }

    /// Largest `|y|` with a lattice point on `Q(x, y) <= n`.
    ///
    /// `4a·Q(x, y) = (2ax + by)² + |D|·y²`, so `y² <= 4an / |D|`.
    pub fn y_bound(&self, n: u64) -> i64 {
        let num = 4 * self.a as u128 * n as u128;
        iroot_u128(num / self.discriminant().unsigned_abs(), 2) as i64
    }

    /// The `x` values (at most two) with `Q(x, y) = n` for a fixed `y`.
    fn solve_x(&self, y: i64, n: u64) -> impl Iterator<Item = i64> {
        let (a, b, c) = (self.a as i128, self.b as i128, self.c as i128);
        let y = y as i128;
        // a x² + (b y) x + (c y² − n) = 0
        let disc = b * b * y * y - 4 * a * (c * y * y - n as i128);
        let mut out = [None, None];
        if disc >= 0 {
            let s = iroot_u128(disc as u128, 2) as i128;
            if s * s == disc {
                for (slot, num) in out.iter_mut().zip([-b * y + s, -b * y - s]) {
                    if num % (2 * a) == 0 {
                        *slot = Some((num / (2 * a)) as i64);
                    }
                }
                if s == 0 {
                    out[1] = None;
                }
            }
        }
        out.into_iter().flatten()
    }

    /// Every `(x, y) ∈ ℤ²` with `Q(x, y) = n`, by exhaustive search over the
    /// ellipse, ordered by `y` then `x`.
    pub fn representations(&self, n: u64) -> Vec<(i64, i64)> {
        let ymax = self.y_bound(n);
        let mut out = Vec::new();
        for y in -ymax..=ymax {
            let mut xs: Vec<i64> = self.solve_x(y, n).collect();
            xs.sort_unstable();
            out.extend(xs.into_iter().map(|x| (x, y)));
        }
        out
    }

    /// Number of lattice points on `Q(x, y) = n`.
    pub fn count_representations(&self, n: u64) -> u64 {
        let ymax = self.y_bound(n);
        (-ymax..=ymax).map(|y| self.solve_x(y, n).count() as u64).sum()
    }
}

/// Canonical representation of `n` by `q`, if any.
///
/// Among all solutions the witness minimises `(|v|, |u|)`, preferring
/// `v >= 0` and then `u >= 0` on ties.
pub fn represent_by_form(q: &QuadraticForm, n: u64) -> Result<Option<(i64, i64)>> {
    if n == 0 {
        return Err(domain("represent_by_form needs n >= 1"));
    }
    let ymax = q.y_bound(n);
    for vabs in 0..=ymax {
        let best = [vabs, -vabs]
            .into_iter()
            .flat_map(|v| q.solve_x(v, n).map(move |u| (u, v)))
            .min_by_key(|&(u, v)| (u.unsigned_abs(), v < 0, u < 0));
        if best.is_some() {
            return Ok(best);
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CubicTag {
    Residue,
    Nonresidue,
    NotCoprime,
}

/// Outcome of the Euler cubic-residue test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CubicClass {
    pub tag: CubicTag,
    /// Cube-root-of-unity exponent; only set for `p ≡ 1 (mod 3)`.
    pub exponent: Option<u8>,
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(domain(format!("{p} is not prime")))
    }
}

fn reduce(a: i64, p: u64) -> u64 {
    (a as i128).rem_euclid(p as i128) as u64
}

/// The smallest `ζ ∈ [2, p−1]` with `ζ³ ≡ 1 (mod p)`, for `p ≡ 1 (mod 3)`.
///
/// The two primitive cube roots are `g^((p−1)/3)` and its square for any
/// non-cube `g`; the smaller one is returned.
pub fn canonical_cube_root_of_unity(p: u64) -> Result<u64> {
    require_prime(p)?;
    if p % 3 != 1 {
        return Err(domain(format!("{p} is not 1 mod 3")));
    }
    let e = (p - 1) / 3;
    let r = (2..p)
        .map(|g| powmod(g, e, p))
        .find(|&r| r != 1)
        .expect("a non-cube exists modulo p = 1 mod 3");
    let r2 = (r as u128 * r as u128 % p as u128) as u64;
    Ok(r.min(r2))
}

fn exponent_unchecked(a: u64, p: u64) -> Result<u8> {
    let t = powmod(a, (p - 1) / 3, p);
    if t == 1 {
        return Ok(0);
    }
    let z = canonical_cube_root_of_unity(p)?;
    if t == z {
        Ok(1)
    } else if t == (z as u128 * z as u128 % p as u128) as u64 {
        Ok(2)
    } else {
        Err(Error::Consistency(format!(
            "{a}^((p-1)/3) mod {p} = {t} is not a cube root of unity"
        )))
    }
}

/// Euler's criterion for cubes modulo a prime.
pub fn cubic_residue_euler(a: i64, p: u64) -> Result<CubicClass> {
    require_prime(p)?;
    let r = reduce(a, p);
    if r == 0 {
        return Ok(CubicClass { tag: CubicTag::NotCoprime, exponent: None });
    }
    if p % 3 != 1 {
        return Ok(CubicClass { tag: CubicTag::Residue, exponent: None });
    }
    let m = exponent_unchecked(r, p)?;
    let tag = if m == 0 { CubicTag::Residue } else { CubicTag::Nonresidue };
    Ok(CubicClass { tag, exponent: Some(m) })
}

/// `m ∈ {0, 1, 2}` with `a^((p−1)/3) ≡ ζ^m (mod p)` for the canonical `ζ`.
pub fn cubic_character_exponent(a: i64, p: u64) -> Result<u8> {
    require_prime(p)?;
    if p % 3 != 1 {
        return Err(domain(format!("{p} is not 1 mod 3")));
    }
    let r = reduce(a, p);
    if r == 0 {
        return Err(domain(format!("{p} divides {a}")));
    }
    exponent_unchecked(r, p)
}

/// The two values of the cubic symbol entering the singular series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Chi {
    One,
    MinusHalf,
}

impl Chi {
    pub fn value(self) -> f64 {
        match self {
            Chi::One => 1.0,
            Chi::MinusHalf => -0.5,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Three,
    TwoMod3,
    ResidueForm,
    NonresidueForm,
}

/// Classification of a prime against `x³ + 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeClass {
    pub p: u64,
    pub branch: Branch,
    pub witness: Option<(i64, i64)>,
    pub rho_p: u8,
    pub chi: Option<Chi>,
}

/// Classifies `p` by form representation and cross-checks with Euler's test
/// on 2.
pub fn gauss_classify(p: u64) -> Result<PrimeClass> {
    require_prime(p)?;
    if p == 3 || p % 3 == 2 {
        let branch = if p == 3 { Branch::Three } else { Branch::TwoMod3 };
        return Ok(PrimeClass { p, branch, witness: None, rho_p: 1, chi: None });
    }
    let residue = represent_by_form(&QuadraticForm::RESIDUE_FORM, p)?;
    let nonresidue = represent_by_form(&QuadraticForm::NONRESIDUE_FORM, p)?;
    let euler = cubic_residue_euler(2, p)?.tag;
    let class = match (residue, nonresidue, euler) {
        (Some(w), None, CubicTag::Residue) => PrimeClass {
            p,
            branch: Branch::ResidueForm,
            witness: Some(w),
            rho_p: 3,
            chi: Some(Chi::One),
        },
        (None, Some(w), CubicTag::Nonresidue) => PrimeClass {
            p,
            branch: Branch::NonresidueForm,
            witness: Some(w),
            rho_p: 0,
            chi: Some(Chi::MinusHalf),
        },
        _ => {
            return Err(Error::Consistency(format!(
                "p = {p}: x^2+27y^2 -> {residue:?}, 4x^2+2xy+7y^2 -> {nonresidue:?}, Euler test on 2 -> {euler:?}"
            )))
        }
    };
    Ok(class)
}

/// Classifies every prime `p <= pmax` with `p ≡ 1 (mod 3)` in parallel;
/// results are in ascending `p`.
pub fn classify_primes(pmax: u64) -> Vec<Result<PrimeClass>> {
    let primes: Vec<u64> = primes_up_to(pmax).into_iter().filter(|p| p % 3 == 1).collect();
    primes.par_iter().map(|&p| gauss_classify(p)).collect()
}

/// `χ(−k)` modulo `p`: `1` if `−k` is a cube, `−1/2` otherwise.
pub fn chi(k: i64, p: u64) -> Result<Chi> {
    require_prime(p)?;
    if p % 3 != 1 {
        return Err(domain(format!("chi needs p = 1 mod 3, got {p}")));
    }
    if reduce(k, p) == 0 {
        return Err(domain(format!("{p} divides {k}")));
    }
    let neg = (-(k as i128)).rem_euclid(p as i128) as u64;
    Ok(match exponent_unchecked(neg, p)? {
        0 => Chi::One,
        _ => Chi::MinusHalf,
    })
}

/// Number of roots of `x³ + k ≡ 0 (mod p)`.
pub fn rho_prime(k: i64, p: u64) -> Result<u8> {
    require_prime(p)?;
    // p | k: x³ ≡ 0 forces x ≡ 0.
    if reduce(k, p) == 0 || p == 3 || p % 3 == 2 {
        return Ok(1);
    }
    Ok(match chi(k, p)? {
        Chi::One => 3,
        Chi::MinusHalf => 0,
    })
}

/// `ρ(q) = Π_{p | q} ρ(p)` for squarefree `q`.
pub fn rho(k: i64, q: u64) -> Result<u64> {
    if q == 0 {
        return Err(domain("rho needs q >= 1"));
    }
    let f = factorize(q);
    if !f.is_squarefree() {
        return Err(domain(format!(
            "rho product formula needs squarefree q, {q} is not; use rho_bruteforce"
        )));
    }
    let mut acc = 1u64;
    for p in f.primes() {
        acc *= rho_prime(k, p)? as u64;
    }
    Ok(acc)
}

/// Largest modulus accepted by the linear-scan root counters.
pub const BRUTE_FORCE_BUDGET: u64 = 10_000_000;

/// All `x ∈ [0, q)` with `f(x) ≡ 0 (mod q)`, ascending.
pub fn roots_mod(f: &Polynomial, q: u64) -> Result<Vec<u64>> {
    if q == 0 {
        return Err(domain("modulus 0"));
    }
    if q > BRUTE_FORCE_BUDGET {
        return Err(resource(format!("modulus {q} above linear-scan budget {BRUTE_FORCE_BUDGET}")));
    }
    Ok((0..q).filter(|&x| f.eval_mod(x, q) == 0).collect())
}

/// Exact root count of `f` modulo any `q`, by linear scan.
pub fn rho_bruteforce(f: &Polynomial, q: u64) -> Result<u64> {
    if q == 0 {
        return Err(domain("modulus 0"));
    }
    if q > BRUTE_FORCE_BUDGET {
        return Err(resource(format!("modulus {q} above linear-scan budget {BRUTE_FORCE_BUDGET}")));
    }
    Ok((0..q).filter(|&x| f.eval_mod(x, q) == 0).count() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cubes_mod(p: u64) -> Vec<u64> {
        let mut v: Vec<u64> = (1..p).map(|x| x * x * x % p).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    #[test]
    fn euler_examples() {
        assert_eq!(cubic_residue_euler(2, 31).unwrap().tag, CubicTag::Residue);
        assert_eq!(cubic_residue_euler(2, 7).unwrap().tag, CubicTag::Nonresidue);
        assert_eq!(cubic_residue_euler(7, 7).unwrap().tag, CubicTag::NotCoprime);
        assert_eq!(cubic_residue_euler(5, 11).unwrap(), CubicClass { tag: CubicTag::Residue, exponent: None });
        assert!(cubic_residue_euler(2, 9).is_err());
    }

    #[test]
    fn euler_matches_cube_table() {
        for p in primes_up_to(400) {
            let cubes = cubes_mod(p);
            for a in 1..p {
                let tag = cubic_residue_euler(a as i64, p).unwrap().tag;
                assert_eq!(tag == CubicTag::Residue, cubes.binary_search(&a).is_ok(), "a={a} p={p}");
            }
        }
    }

    #[test]
    fn exponent_examples() {
        assert_eq!(cubic_character_exponent(1, 7), Ok(0));
        assert_eq!(cubic_character_exponent(2, 7), Ok(2));
        assert_eq!(cubic_character_exponent(2, 13), Ok(1));
        assert_eq!(canonical_cube_root_of_unity(7), Ok(2));
        assert_eq!(canonical_cube_root_of_unity(13), Ok(3));
        assert!(cubic_character_exponent(2, 5).is_err());
        assert!(cubic_character_exponent(14, 7).is_err());
    }

    #[test]
    fn canonical_root_is_smallest() {
        for p in primes_up_to(2000).into_iter().filter(|p| p % 3 == 1) {
            let brute = (2..p).find(|&z| z * z % p * z % p == 1).unwrap();
            assert_eq!(canonical_cube_root_of_unity(p), Ok(brute));
        }
    }

    #[test]
    fn exponent_is_a_homomorphism() {
        for p in primes_up_to(300).into_iter().filter(|p| p % 3 == 1) {
            for a in 1..p.min(40) {
                for b in 1..p.min(40) {
                    let ea = cubic_character_exponent(a as i64, p).unwrap();
                    let eb = cubic_character_exponent(b as i64, p).unwrap();
                    let eab = cubic_character_exponent((a * b % p) as i64, p).unwrap();
                    assert_eq!((ea + eb) % 3, eab);
                }
            }
        }
    }

    #[test]
    fn form_construction() {
        assert!(QuadraticForm::new(1, 0, 27).is_ok());
        assert!(QuadraticForm::new(1, 0, -1).is_err());
        assert!(QuadraticForm::new(-1, 0, -1).is_err());
        assert!(QuadraticForm::new(2, 2, 2).is_err());
        assert_eq!(QuadraticForm::NONRESIDUE_FORM.discriminant(), -108);
    }

    #[test]
    fn representation_examples() {
        let r = QuadraticForm::RESIDUE_FORM;
        let n = QuadraticForm::NONRESIDUE_FORM;
        assert_eq!(represent_by_form(&r, 31), Ok(Some((2, 1))));
        assert_eq!(represent_by_form(&n, 7), Ok(Some((0, 1))));
        assert_eq!(represent_by_form(&r, 7), Ok(None));
        assert_eq!(represent_by_form(&n, 13), Ok(Some((1, 1))));
        assert!(represent_by_form(&r, 0).is_err());
    }

    #[test]
    fn representations_match_brute_force() {
        for q in [QuadraticForm::RESIDUE_FORM, QuadraticForm::NONRESIDUE_FORM, QuadraticForm::SUM_OF_SQUARES,
                  QuadraticForm::new(3, 1, 5).unwrap()] {
            for n in 1..400u64 {
                let mut brute = Vec::new();
                for y in -30i64..=30 {
                    for x in -30i64..=30 {
                        if q.eval(x, y) == n as i128 {
                            brute.push((x, y));
                        }
                    }
                }
                brute.sort_by_key(|&(x, y)| (y, x));
                assert_eq!(q.representations(n), brute, "{q:?} n={n}");
                assert_eq!(q.count_representations(n), brute.len() as u64);
            }
        }
    }

    #[test]
    fn gauss_examples() {
        let c = gauss_classify(31).unwrap();
        assert_eq!((c.branch, c.witness, c.rho_p, c.chi), (Branch::ResidueForm, Some((2, 1)), 3, Some(Chi::One)));
        let c = gauss_classify(7).unwrap();
        assert_eq!((c.branch, c.witness, c.rho_p, c.chi), (Branch::NonresidueForm, Some((0, 1)), 0, Some(Chi::MinusHalf)));
        let c = gauss_classify(13).unwrap();
        assert_eq!((c.branch, c.witness, c.rho_p), (Branch::NonresidueForm, Some((1, 1)), 0));
        assert_eq!(gauss_classify(3).unwrap().branch, Branch::Three);
        assert_eq!(gauss_classify(2).unwrap().branch, Branch::TwoMod3);
        assert_eq!(gauss_classify(11).unwrap().rho_p, 1);
        assert!(matches!(gauss_classify(91), Err(Error::Domain(_))));
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi(2, 31), Ok(Chi::One));
        assert_eq!(chi(2, 7), Ok(Chi::MinusHalf));
        assert!(chi(2, 5).is_err());
        assert!(chi(14, 7).is_err());
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho_prime(2, 3), Ok(1));
        assert_eq!(rho_prime(2, 31), Ok(3));
        assert_eq!(rho_prime(2, 7), Ok(0));
        assert_eq!(rho_prime(14, 7), Ok(1));
        assert_eq!(rho(2, 1), Ok(1));
        assert_eq!(rho(2, 15), Ok(1));
        assert_eq!(rho(2, 35), Ok(0));
        assert!(matches!(rho(2, 9), Err(Error::Domain(_))));
        let f = Polynomial::cubic_family(2);
        assert_eq!(rho_bruteforce(&f, 1), Ok(1));
        assert_eq!(rho_bruteforce(&f, 9), Ok(0));
        assert_eq!(rho_bruteforce(&f, 31), Ok(3));
        assert_eq!(rho_bruteforce(&f, 15), Ok(1));
        assert_eq!(rho_bruteforce(&f, 35), Ok(0));
        assert_eq!(roots_mod(&f, 31), Ok(vec![11, 24, 27]));
        assert!(matches!(rho_bruteforce(&f, BRUTE_FORCE_BUDGET + 1), Err(Error::Resource(_))));
    }

    #[test]
    fn rho_prime_matches_scan_for_several_k() {
        for k in [-7i64, -2, 1, 2, 3, 5, 6, 10, 12] {
            let f = Polynomial::cubic_family(k);
            for p in primes_up_to(500) {
                assert_eq!(rho_prime(k, p).unwrap() as u64, rho_bruteforce(&f, p).unwrap(), "k={k} p={p}");
            }
        }
    }

    #[test]
    fn cube_root_counts_sum_to_p() {
        for p in primes_up_to(300) {
            let mut counts = vec![0u64; p as usize];
            for x in 0..p {
                counts[(x * x * x % p) as usize] += 1;
            }
            assert_eq!(counts.iter().sum::<u64>(), p);
            for a in 0..p {
                let f = Polynomial::cubic_family(-(a as i64));
                assert_eq!(counts[a as usize], rho_bruteforce(&f, p).unwrap());
            }
        }
    }
}
