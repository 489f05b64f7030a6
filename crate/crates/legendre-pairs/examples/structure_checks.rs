//! Run the structural verifier at several lengths and show both a healthy
//! run and the negative controls that prove it can catch falsehoods.
//!
//! ```bash
//! cargo run --release --example structure_checks
//! ```

use legendre_pairs::verifier::{
    negative_control_corrupted_relation, negative_control_reduced_generators, run_checks,
};
use legendre_pairs::{Error, Modulus, DEFAULT_SEED};

fn main() -> Result<(), Error> {
    for ell in [3usize, 5, 7, 9] {
        println!("== length {ell}");
        for certificate in run_checks(Modulus::new(ell)?, None, DEFAULT_SEED)? {
            println!("{}", certificate.to_tsv_line());
        }
    }

    println!("== negative controls at length 5");
    let corrupted = negative_control_corrupted_relation(Modulus::new(5)?);
    println!("{}", corrupted.to_tsv_line());
    let reduced = negative_control_reduced_generators(Modulus::new(5)?);
    println!("{}", reduced.to_tsv_line());
    assert!(!corrupted.passed && !reduced.passed);
    Ok(())
}
