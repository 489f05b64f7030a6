use std::io::{stderr, stdout};

fn main() {
    let code = legendre_pairs::cli::run(
        std::env::args(),
        &mut stdout().lock(),
        &mut stderr().lock(),
    );
    std::process::exit(code);
}
