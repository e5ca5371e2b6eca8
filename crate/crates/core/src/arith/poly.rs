use std::fmt;

use crate::arith::primes::mulmod;
use crate::error::{capacity, domain, Result};

/// Integer polynomial, coefficients stored lowest degree first.
///
/// Trailing zero coefficients are trimmed on construction, so the stored
/// vector is empty exactly for the zero polynomial and otherwise ends in the
/// leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<i64>,
}

impl Polynomial {
    /// Builds a polynomial from coefficients `[c0, c1, c2, ...]`.
    pub fn from_low(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Builds a polynomial from coefficients listed leading term first.
    pub fn from_high(coeffs: &[i64]) -> Self {
        Self::from_low(coeffs.iter().rev().copied().collect())
    }

    /// The pure cubic `x³ + k`.
    pub fn cubic_family(k: i64) -> Self {
        Self::from_low(vec![k, 0, 0, 1])
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn leading(&self) -> i64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// Returns `Some(k)` when the polynomial is exactly `x³ + k`.
    pub fn as_cubic_family(&self) -> Option<i64> {
        match self.coeffs.as_slice() {
            [k, 0, 0, 1] => Some(*k),
            _ => None,
        }
    }

    pub fn derivative(&self) -> Self {
        Self::from_low(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * i as i64)
                .collect(),
        )
    }

    /// Exact evaluation; overflow of the 128-bit intermediate is a capacity
    /// error.
    pub fn eval(&self, x: i64) -> Result<i128> {
        let x = x as i128;
        let mut acc: i128 = 0;
        for &c in self.coeffs.iter().rev() {
            acc = acc
                .checked_mul(x)
                .and_then(|v| v.checked_add(c as i128))
                .ok_or_else(|| capacity(format!("{self} overflows at x = {x}")))?;
        }
        Ok(acc)
    }

    /// Evaluation that must land in the unsigned 64-bit range.
    pub fn eval_u64(&self, x: i64) -> Result<u64> {
        let v = self.eval(x)?;
        u64::try_from(v).map_err(|_| capacity(format!("{self} at x = {x} is {v}, outside u64")))
    }

    /// `f(x) mod m` for `x` already reduced modulo `m`.
    pub fn eval_mod(&self, x: u64, m: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            let c = (c as i128).rem_euclid(m as i128) as u64;
            acc = mulmod(acc, x, m);
            acc = ((acc as u128 + c as u128) % m as u128) as u64;
        }
        acc
    }

    /// Coefficients reduced into `[0, m)`, lowest first, trimmed.
    pub fn reduce_mod(&self, m: u64) -> Vec<u64> {
        let mut v: Vec<u64> = self
            .coeffs
            .iter()
            .map(|&c| (c as i128).rem_euclid(m as i128) as u64)
            .collect();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    pub(crate) fn require_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(domain("zero polynomial"))
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{mag}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}
