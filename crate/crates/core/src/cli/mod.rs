//! Command-line surface: every computation as a replayable batch job.
//!
//! Exit codes: `0` success, `2` usage or domain error, `3` capacity or
//! resource limit, `4` internal consistency failure (including a failed
//! `verify` property), `1` I/O failure writing the output.

pub mod output;
pub mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{ArgGroup, Args, CommandFactory, FromArgMatches, Parser, Subcommand};
use serde_json::{Map, Value};

use crate::arith::{factorize, fixed_divisor, Polynomial};
use crate::counting::{
    count_table, lambda_sum_rhs, prime_power_tail, progression_weighted_sum, singular_series,
    weighted_lambda_sum, Weight, DEFAULT_P_CUTOFF,
};
use crate::dset::{dset_density, enumerate_dset};
use crate::error::{domain, Error, Result};
use crate::residues::{cubic_residue_euler, gauss_classify, rho, rho_bruteforce, CubicTag, QuadraticForm};
use crate::series::{
    decade_checkpoints, dirichlet_partial_sum, epstein_mu_sum, epstein_zeta_partial,
    epstein_zeta_partial_per_n, fit_last_quartile,
};
pub use output::{csv_body, fmt_real, Cell, Format, OutputTable};
use verify::{run_suite, Scale, Suite, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;
pub const EXIT_CONSISTENCY: i32 = 4;

/// Largest `n_max` for which `epstein` also runs the per-`n` cross-check.
const EPSTEIN_PER_N_LIMIT: u64 = 100_000;

#[derive(Debug, Parser)]
#[command(name = "cubic-primes", version, about = "Primes of the form n^3 + k and the arithmetic around them")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Output dialect.
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads for range-parallel paths; results do not depend on it.
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("range").required(true).args(["x", "checkpoints"])))]
struct Range {
    /// Single bound.
    #[arg(long, value_parser = parse_u64)]
    x: Option<u64>,
    /// Comma-separated ascending bounds, e.g. 1e6,1e9,1e12.
    #[arg(long, value_delimiter = ',', value_parser = parse_u64)]
    checkpoints: Option<Vec<u64>>,
}

impl Range {
    fn points(&self) -> Vec<u64> {
        self.checkpoints.clone().unwrap_or_else(|| self.x.into_iter().collect())
    }
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("poly").required(true).args(["poly_high", "poly_low"])))]
struct PolyArg {
    /// Coefficients, leading term first (`1,0,0,2` is x^3 + 2).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    poly_high: Option<Vec<i64>>,
    /// Coefficients, constant term first (`2,0,0,1` is x^3 + 2).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    poly_low: Option<Vec<i64>>,
}

impl PolyArg {
    fn polynomial(&self) -> Polynomial {
        match (&self.poly_high, &self.poly_low) {
            (Some(h), _) => Polynomial::from_high(h),
            (_, Some(l)) => Polynomial::from_low(l.clone()),
            _ => unreachable!("clap group requires one"),
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count primes n^3 + k <= x against the conjectured main term.
    Count {
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[command(flatten)]
        range: Range,
        /// Singular-series truncation.
        #[arg(long, default_value_t = DEFAULT_P_CUTOFF, value_parser = parse_u64)]
        pmax: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Truncated singular series at one or several cutoffs.
    Constant {
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, default_value_t = DEFAULT_P_CUTOFF, value_parser = parse_u64)]
        pmax: u64,
        /// Report the product at each of these cutoffs instead of just --pmax.
        #[arg(long, value_delimiter = ',', value_parser = parse_u64)]
        checkpoints: Option<Vec<u64>>,
        #[command(flatten)]
        common: Common,
    },
    /// Cubic residuacity of a modulo p, and the form classification of p.
    Residue {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, value_parser = parse_u64)]
        p: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Root counts of x^3 + k modulo q: product formula and linear scan.
    #[command(group(ArgGroup::new("qs").required(true).args(["q", "nmax"])))]
    Rho {
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, value_parser = parse_u64)]
        q: Option<u64>,
        /// Every q in [1, nmax].
        #[arg(long, value_parser = parse_u64)]
        nmax: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// Density of the moduli d for which x^3 + k has a root.
    Dset {
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, value_parser = parse_u64)]
        x: u64,
        #[arg(long, value_delimiter = ',', value_parser = parse_u64)]
        checkpoints: Option<Vec<u64>>,
        /// Emit the members themselves.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Partial sums of mu(n) log n / n^s over those moduli.
    Dseries {
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, value_parser = parse_u64)]
        x: u64,
        #[arg(long, default_value_t = 1.0)]
        s: f64,
        #[arg(long, value_delimiter = ',', value_parser = parse_u64)]
        checkpoints: Option<Vec<u64>>,
        #[command(flatten)]
        common: Common,
    },
    /// Epstein zeta and mu-weighted partial sums of a binary quadratic form.
    Epstein {
        #[arg(long, default_value_t = 1)]
        a: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        b: i64,
        #[arg(long, default_value_t = 1)]
        c: i64,
        #[arg(long, default_value_t = 2.0)]
        s: f64,
        #[arg(long, default_value_t = 10_000, value_parser = parse_u64)]
        nmax: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Weighted sums of Lambda(f(n)), optionally with the divisor-side expansion.
    #[command(group(ArgGroup::new("family").args(["k", "poly_high", "poly_low"]).required(true)))]
    Chebyshev {
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        poly_high: Option<Vec<i64>>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        poly_low: Option<Vec<i64>>,
        /// power:K, totient, sigma or tau.
        #[arg(long, default_value = "power:1")]
        weight: String,
        #[command(flatten)]
        range: Range,
        /// Also evaluate the divisor-side expansion (x^3 + k, power:1 only).
        #[arg(long)]
        rhs: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Sum of n <= x over n^3 = a (mod q), exact and closed forms.
    Lemma4 {
        #[arg(long, value_parser = parse_u64)]
        q: u64,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, value_parser = parse_u64)]
        x: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Contribution of n^3 + k = p^v, v >= 2, against x^(1/2) log^2 x.
    Tail {
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[command(flatten)]
        range: Range,
        #[command(flatten)]
        common: Common,
    },
    /// Fixed divisor gcd(f(Z)) of a polynomial.
    Fixdiv {
        #[command(flatten)]
        poly: PolyArg,
        #[command(flatten)]
        common: Common,
    },
    /// Run an invariant suite; exit 4 if any property fails.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, value_enum, default_value = "full")]
        scale: Scale,
        #[arg(long, value_parser = parse_u64)]
        pmax: Option<u64>,
        #[arg(long, value_parser = parse_u64)]
        nmax: Option<u64>,
        #[arg(long, default_value_t = 0)]
        sample_seed: u64,
        #[command(flatten)]
        common: Common,
    },
}

/// Accepts `1000000`, `1_000_000`, `1e6` and `10^6`.
fn parse_u64(s: &str) -> std::result::Result<u64, String> {
    let t = s.replace('_', "");
    let pow = |base: &str, exp: &str| -> Option<u64> {
        let b: u64 = base.parse().ok()?;
        let e: u32 = exp.parse().ok()?;
        b.checked_pow(e)
    };
    if let Ok(v) = t.parse() {
        return Ok(v);
    }
    let parsed = if let Some((m, e)) = t.split_once(['e', 'E']) {
        pow("10", e).and_then(|p| m.parse::<u64>().ok()?.checked_mul(p))
    } else if let Some((b, e)) = t.split_once('^') {
        pow(b, e)
    } else {
        None
    };
    parsed.ok_or_else(|| format!("not a non-negative 64-bit integer: {s:?}"))
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Domain(_) => EXIT_USAGE,
        Error::Capacity(_) | Error::Resource(_) => EXIT_CAPACITY,
        Error::Consistency(_) => EXIT_CONSISTENCY,
    }
}

/// Runs the CLI on `argv` (without the program name), writing to the real
/// standard streams. Returns the process exit code.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output and error streams.
pub fn run_with<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = std::iter::once("cubic-primes".to_string())
        .chain(argv.into_iter().map(Into::into))
        .collect();
    let matches = match Cli::command().try_get_matches_from(&args) {
        Ok(m) => m,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(rendered.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(c) => c,
        Err(e) => {
            let _ = err.write_all(e.render().to_string().as_bytes());
            return EXIT_USAGE;
        }
    };
    let (name, sub) = matches.subcommand().expect("subcommand required");
    let arg_ids: Vec<String> = Cli::command()
        .find_subcommand(name)
        .map(|c| c.get_arguments().map(|a| a.get_id().to_string()).collect())
        .unwrap_or_default();
    let mut params = Map::new();
    for id in sub.ids().filter(|id| arg_ids.iter().any(|a| a == id.as_str())) {
        if let Some(raw) = sub.get_raw(id.as_str()) {
            let vals: Vec<String> = raw.map(|v| v.to_string_lossy().into_owned()).collect();
            let v = if vals.len() == 1 { Value::from(vals[0].clone()) } else { Value::from(vals) };
            params.insert(id.to_string(), v);
        }
    }
    let common = cli.command.common();
    if common.threads == 0 {
        let _ = writeln!(err, "error: --threads must be at least 1");
        return EXIT_USAGE;
    }
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(common.threads).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start thread pool: {e}");
            return EXIT_CAPACITY;
        }
    };
    let start = Instant::now();
    let mut notes = Vec::new();
    let result = pool.install(|| execute(&cli.command, &mut notes));
    for n in &notes {
        let _ = writeln!(err, "{n}");
    }
    let (mut table, failed) = match result {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code(&e);
        }
    };
    table.meta("command", name);
    table.meta("parameters", Value::Object(params));
    table.meta("version", env!("CARGO_PKG_VERSION"));
    table.meta("wall_time_s", start.elapsed().as_secs_f64());
    let text = table.render(common.format);
    let written = match &common.out {
        Some(path) => std::fs::write(path, text),
        None => out.write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return EXIT_IO;
    }
    if failed {
        EXIT_CONSISTENCY
    } else {
        EXIT_OK
    }
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Count { common, .. }
            | Command::Constant { common, .. }
            | Command::Residue { common, .. }
            | Command::Rho { common, .. }
            | Command::Dset { common, .. }
            | Command::Dseries { common, .. }
            | Command::Epstein { common, .. }
            | Command::Chebyshev { common, .. }
            | Command::Lemma4 { common, .. }
            | Command::Tail { common, .. }
            | Command::Fixdiv { common, .. }
            | Command::Verify { common, .. } => common,
        }
    }
}

/// Computes the table; the flag is `true` when a verify property failed.
/// Diagnostics for standard error go into `notes`.
fn execute(cmd: &Command, notes: &mut Vec<String>) -> Result<(OutputTable, bool)> {
    let table = match cmd {
        Command::Count { k, range, pmax, .. } => {
            let mut t = OutputTable::new(&["x", "observed", "predicted", "ratio", "p_cutoff", "error_scale"]);
            for r in count_table(*k, &range.points(), *pmax)? {
                t.push(vec![
                    r.x.into(),
                    r.observed.into(),
                    r.predicted.into(),
                    r.ratio.into(),
                    r.p_cutoff.into(),
                    r.error_scale.into(),
                ]);
            }
            t
        }
        Command::Constant { k, pmax, checkpoints, .. } => {
            let mut t = OutputTable::new(&["p_cutoff", "singular_series"]);
            for c in checkpoints.clone().unwrap_or_else(|| vec![*pmax]) {
                t.push(vec![c.into(), singular_series(*k, c)?.into()]);
            }
            t
        }
        Command::Residue { a, p, .. } => {
            let class = cubic_residue_euler(*a, *p)?;
            let g = gauss_classify(*p)?;
            let mut t = OutputTable::new(&["a", "p", "class", "exponent", "gauss", "u", "v", "rho_p", "chi"]);
            t.push(vec![
                (*a).into(),
                (*p).into(),
                match class.tag {
                    CubicTag::Residue => "Residue",
                    CubicTag::Nonresidue => "Nonresidue",
                    CubicTag::NotCoprime => "NotCoprime",
                }
                .into(),
                class.exponent.into(),
                format!("{:?}", g.branch).into(),
                g.witness.map(|w| w.0).into(),
                g.witness.map(|w| w.1).into(),
                g.rho_p.into(),
                g.chi.map(|c| c.value()).into(),
            ]);
            t
        }
        Command::Rho { k, q, nmax, .. } => {
            let f = Polynomial::cubic_family(*k);
            let qs: Vec<u64> = match (q, nmax) {
                (Some(q), _) => vec![*q],
                (_, Some(n)) => (1..=*n).collect(),
                _ => unreachable!("clap group requires one"),
            };
            let mut t = OutputTable::new(&["q", "squarefree", "rho", "rho_bruteforce"]);
            for q in qs {
                if q == 0 {
                    return Err(domain("q must be >= 1"));
                }
                let sf = factorize(q).is_squarefree();
                let formula = if sf { Some(rho(*k, q)?) } else { None };
                t.push(vec![q.into(), (sf as u64).into(), formula.into(), rho_bruteforce(&f, q)?.into()]);
            }
            t
        }
        Command::Dset { k, x, checkpoints, list, .. } => {
            let f = Polynomial::cubic_family(*k);
            if *list {
                let mut t = OutputTable::new(&["d"]);
                for d in enumerate_dset(&f, *x)? {
                    t.push(vec![d.into()]);
                }
                t
            } else {
                let cps = checkpoints.clone().unwrap_or_else(|| decade_checkpoints(*x));
                let stats = dset_density(&f, *x, &cps)?;
                let mut t = OutputTable::new(&["x", "count", "ratio"]);
                for c in &stats.checkpoints {
                    t.push(vec![c.x.into(), c.count.into(), c.ratio.into()]);
                }
                if let Some(fit) = stats.decay {
                    t.meta("decay_beta", fmt_real(fit.beta));
                    t.meta("decay_constant", fmt_real(fit.constant));
                }
                t
            }
        }
        Command::Dseries { k, x, s, checkpoints, .. } => {
            let f = Polynomial::cubic_family(*k);
            let cps = checkpoints.clone().unwrap_or_else(|| decade_checkpoints(*x));
            let records = dirichlet_partial_sum(&f, *s, *x, &cps)?;
            let mut t = OutputTable::new(&["x", "value", "terms_used"]);
            for r in &records {
                t.push(vec![r.x.into(), r.value.into(), r.terms_used.into()]);
            }
            let (kappa, residual) = fit_last_quartile(&records);
            if let Some(kappa) = kappa {
                t.meta("fitted_kappa", fmt_real(kappa));
            }
            t.meta("fit_residual", fmt_real(residual));
            t
        }
        Command::Epstein { a, b, c, s, nmax, .. } => {
            let q = QuadraticForm::new(*a, *b, *c)?;
            let lattice = epstein_zeta_partial(&q, *s, *nmax)?;
            let per_n = if *nmax <= EPSTEIN_PER_N_LIMIT {
                Some(epstein_zeta_partial_per_n(&q, *s, *nmax)?)
            } else {
                None
            };
            let mut t = OutputTable::new(&["a", "b", "c", "s", "n_max", "zeta_lattice", "zeta_per_n", "mu_sum"]);
            t.push(vec![
                (*a).into(),
                (*b).into(),
                (*c).into(),
                (*s).into(),
                (*nmax).into(),
                lattice.into(),
                per_n.into(),
                epstein_mu_sum(&q, *s, *nmax)?.into(),
            ]);
            t
        }
        Command::Chebyshev { k, poly_high, poly_low, weight, range, rhs, .. } => {
            let weight: Weight = weight.parse()?;
            let f = match (k, poly_high, poly_low) {
                (Some(k), _, _) => Polynomial::cubic_family(*k),
                (_, Some(h), _) => Polynomial::from_high(h),
                (_, _, Some(l)) => Polynomial::from_low(l.clone()),
                _ => unreachable!("clap group requires one"),
            };
            let rhs_k = match (*rhs, f.as_cubic_family(), weight) {
                (false, _, _) => None,
                (true, Some(k), Weight::Power(1)) => Some(k),
                _ => return Err(domain("--rhs needs the x^3 + k family with weight power:1")),
            };
            let mut t = OutputTable::new(&["x", "weight", "value", "tail_value", "bound", "rhs"]);
            for x in range.points() {
                let r = weighted_lambda_sum(&f, weight, x)?;
                let rhs = rhs_k.map(|k| lambda_sum_rhs(k, x)).transpose()?;
                t.push(vec![
                    x.into(),
                    weight.to_string().into(),
                    r.value.into(),
                    r.tail_value.into(),
                    r.bound.into(),
                    rhs.into(),
                ]);
            }
            t.meta("polynomial", f.to_string());
            t
        }
        Command::Lemma4 { q, a, x, .. } => {
            let s = progression_weighted_sum(*q, *a, *x)?;
            let roots: Vec<String> = s.roots.iter().map(u64::to_string).collect();
            let mut t = OutputTable::new(&[
                "q", "a", "x", "num_roots", "roots", "exact", "closed_form", "uncorrected_form", "leading",
            ]);
            t.push(vec![
                s.q.into(),
                s.a.into(),
                s.x.into(),
                (s.roots.len() as u64).into(),
                roots.join(" ").into(),
                s.exact.into(),
                s.closed_form.into(),
                s.uncorrected_form.into(),
                s.leading.into(),
            ]);
            t
        }
        Command::Tail { k, range, .. } => {
            let mut t = OutputTable::new(&["x", "tail", "bound", "within_bound"]);
            for x in range.points() {
                let (tail, bound) = prime_power_tail(*k, x)?;
                t.push(vec![x.into(), tail.into(), bound.into(), ((tail <= bound) as u64).into()]);
            }
            t
        }
        Command::Fixdiv { poly, .. } => {
            let f = poly.polynomial();
            let d = fixed_divisor(&f)?;
            let mut t = OutputTable::new(&["polynomial", "degree", "fixed_divisor"]);
            t.push(vec![f.to_string().into(), (f.degree() as u64).into(), d.into()]);
            t
        }
        Command::Verify { suite, scale, pmax, nmax, sample_seed, .. } => {
            let cfg = VerifyConfig { scale: *scale, pmax: *pmax, nmax: *nmax, sample_seed: *sample_seed };
            let outcomes = run_suite(*suite, &cfg);
            let mut t = OutputTable::new(&["suite", "property", "checked", "failures", "status"]);
            let mut failed = false;
            for o in &outcomes {
                if let Some(ce) = &o.counterexample {
                    notes.push(format!("{}/{}: counterexample: {ce}", o.suite, o.property));
                }
                failed |= !o.passed();
                t.push(vec![
                    o.suite.into(),
                    o.property.into(),
                    o.checked.into(),
                    o.failures.into(),
                    if o.passed() { "pass" } else { "fail" }.into(),
                ]);
            }
            return Ok((t, failed));
        }
    };
    Ok((table, false))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_parsing() {
        assert_eq!(parse_u64("1000"), Ok(1000));
        assert_eq!(parse_u64("1_000"), Ok(1000));
        assert_eq!(parse_u64("1e18"), Ok(1_000_000_000_000_000_000));
        assert_eq!(parse_u64("5e3"), Ok(5000));
        assert_eq!(parse_u64("10^6"), Ok(1_000_000));
        assert!(parse_u64("1e20").is_err());
        assert!(parse_u64("-3").is_err());
        assert!(parse_u64("abc").is_err());
    }

    #[test]
    fn command_definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
