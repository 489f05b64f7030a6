//! Check whether a pair of ±1 sequences is a Legendre pair.
//!
//! ```bash
//! cargo run --example verify_pair
//! cargo run --example verify_pair -- "-++-+--:-++-+--"
//! ```

use legendre_pairs::seqops::{check_legendre_pair, LpVerdict};
use legendre_pairs::{Error, SequencePair};

fn main() -> Result<(), Error> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "-++-+--:-++-+--".to_string());
    let pair = SequencePair::parse(&text)?;

    println!("pair      : {pair}");
    println!("column sum: {} / {}", pair.u().column_sum(), pair.v().column_sum());

    let m = pair.modulus();
    let lag_sums: Vec<i64> = (1..m.ell())
        .map(|j| pair.u().paf(m.residue(j as i64)) + pair.v().paf(m.residue(j as i64)))
        .collect();
    println!("PAF sums  : {lag_sums:?} (every nonzero lag must give -2)");

    match check_legendre_pair(&pair)? {
        LpVerdict::LegendrePair => println!("verdict   : Legendre pair"),
        witness => println!("verdict   : not a Legendre pair — {witness}"),
    }
    Ok(())
}
