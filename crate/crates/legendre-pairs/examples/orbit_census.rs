//! Orbits and canonical forms: where a pair travels under the symmetry
//! group, which representative names the orbit, and the equivalence test.
//!
//! ```bash
//! cargo run --example orbit_census
//! ```

use legendre_pairs::orbits::{are_equivalent, canonical_pair, decimation_class, pair_orbit};
use legendre_pairs::{Error, Sequence, SequencePair};

fn main() -> Result<(), Error> {
    // A single sequence's orbit under shifts and decimations.
    let v = Sequence::parse_signs("++-")?;
    let class = decimation_class(&v);
    println!("decimation class of ++- :");
    for member in &class {
        println!("  {}", member.sign_string()?);
    }

    // The pair orbit, its size, and the orbit–stabilizer bookkeeping.
    let pair = SequencePair::parse("-+-:-+-")?;
    let report = pair_orbit(&pair, 100)?;
    println!(
        "orbit of {pair}: size {}, stabilizer order {} (size × stabilizer = 72)",
        report.size, report.stabilizer_order
    );
    println!("report line: {}", report.to_tsv_line());
    for member in report.members.as_deref().unwrap_or_default() {
        println!("  {member}");
    }

    // Canonical form: the lexicographic minimum of the orbit with '-' < '+'.
    let canon = canonical_pair(&pair)?;
    println!("canonical representative: {canon}");
    assert_eq!(canonical_pair(&canon)?, canon);

    // Equivalence is exactly "same orbit".
    let shifted = SequencePair::parse("+--:-+-")?;
    println!(
        "{pair} ~ {shifted}? {}",
        if are_equivalent(&pair, &shifted)? { "yes" } else { "no" }
    );
    let sums_flipped = SequencePair::parse("+-+:+-+")?;
    println!(
        "{pair} ~ {sums_flipped}? {} (entry negation is not a group move)",
        if are_equivalent(&pair, &sums_flipped)? { "yes" } else { "no" }
    );
    Ok(())
}
