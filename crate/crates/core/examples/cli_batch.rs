//! Drive the command-line front end in-process and collect its CSV.
//!
//!     cargo run --example cli_batch

use cubic_primes::cli::{csv_body, run_with};

fn main() {
    let jobs: [&[&str]; 3] = [
        &["lemma4", "--q", "31", "--a", "-2", "--x", "100"],
        &["rho", "--k", "2", "--nmax", "12"],
        &["verify", "--suite", "lemma4", "--scale", "tiny"],
    ];
    for job in jobs {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_with(job.iter().copied(), &mut out, &mut err);
        println!("$ cubic-primes {}  (exit {code})", job.join(" "));
        print!("{}", csv_body(&String::from_utf8_lossy(&out)));
        eprint!("{}", String::from_utf8_lossy(&err));
    }
}
