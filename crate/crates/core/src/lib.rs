//! Exact and numerical tools for primes of the form `n³ + k`.
//!
//! The crate is organised bottom-up:
//!
//! * [`arith`]: sieves, Möbius and von Mangoldt functions, deterministic
//!   64-bit primality, factorization, integer roots, fixed divisors.
//! * [`residues`]: cubic residuacity modulo a rational prime (Euler test and
//!   the `u² + 27v²` / `4u² + 2uv + 7v²` classification), and the root-count
//!   function `ρ`.
//! * [`dset`]: the set of moduli `d` for which `f(x) ≡ 0 (mod d)` is solvable,
//!   with enumeration and density reports.
//! * [`series`]: Dirichlet partial sums supported on that set, and Epstein
//!   zeta partial sums of binary quadratic forms.
//! * [`counting`]: prime counts against the conjectured asymptotic, weighted
//!   von Mangoldt sums and their divisor-side expansion, progression sums and
//!   the prime-power tail.
//! * [`cli`]: the batch command-line surface with CSV/JSON output.
//!
//! Runnable walkthroughs for each area live in the crate's `examples/`
//! directory.

pub mod arith;
pub mod cli;
pub mod counting;
pub mod dset;
pub mod error;
mod par;
pub mod residues;
pub mod series;

pub use arith::{ArithTables, Factorization, Polynomial};
pub use error::{Error, Result};
