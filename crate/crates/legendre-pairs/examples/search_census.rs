//! Exhaustive Legendre-pair search and classification for small lengths:
//! totals, class counts, and orbit sizes.
//!
//! ```bash
//! cargo run --release --example search_census
//! ```

use legendre_pairs::{search, Error, Modulus, SearchConfig};

fn main() -> Result<(), Error> {
    for ell in [1usize, 3, 5, 7, 9, 11] {
        let cfg = SearchConfig::new(Modulus::new(ell)?).with_workers(4);
        let report = search::classify_lps(&cfg)?;
        println!(
            "length {ell:>2}: {:>5} Legendre pairs in {} classes",
            report.total_lps,
            report.classes.len()
        );
        for (rep, size) in &report.classes {
            println!("    {rep}  (orbit size {size})");
        }
    }

    // Even lengths come back empty: ±1 entries cannot sum to ±1.
    let empty = search::enumerate_lps(&SearchConfig::new(Modulus::new(8)?))?;
    println!("length  8: {} Legendre pairs", empty.len());
    Ok(())
}
