fn main() {
    std::process::exit(cubic_primes::cli::run(std::env::args().skip(1)));
}
