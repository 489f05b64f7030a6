//! Periodic autocorrelation spectra: exact summation next to the FFT power
//! spectrum, including the fast path's self-reported rounding deviation.
//!
//! ```bash
//! cargo run --example paf_spectrum
//! ```

use legendre_pairs::{Error, Sequence};

fn main() -> Result<(), Error> {
    let quadratic_residue_11 = Sequence::parse_signs("-+-+++---+-")?;
    let exact = quadratic_residue_11.paf_spectrum();
    let fast = quadratic_residue_11.paf_spectrum_fast();

    println!("sequence        : {}", quadratic_residue_11.sign_string()?);
    println!("direct summation: {exact:?}");
    println!("FFT power path  : {:?}", fast.values);
    println!(
        "max deviation   : {:.3e} (guard at {:.1e}; fell back: {})",
        fast.max_deviation,
        1e-6 * quadratic_residue_11.len() as f64,
        fast.fell_back
    );
    assert_eq!(exact, fast.values);

    // The flat tail of -1s at every nonzero lag is what makes the
    // quadratic-residue sequence pair with itself.
    let arbitrary = Sequence::parse_csv("3,-1,4,-1,5")?;
    println!(
        "integer entries work too: {} -> {:?}",
        arbitrary.csv_string(),
        arbitrary.paf_spectrum()
    );
    Ok(())
}
