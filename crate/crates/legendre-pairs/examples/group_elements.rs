//! The full pair-symmetry group in normal form `s^f (d_k,(−1)^r) (c_i,c_j)`:
//! composition, inversion, the text form, and the faithful permutation
//! representation that double-checks the algebra.
//!
//! ```bash
//! cargo run --example group_elements
//! ```

use legendre_pairs::{Error, GgElement, Modulus, SequencePair};

fn main() -> Result<(), Error> {
    let m = Modulus::new(5)?;

    // Every element is a switch power, a signed decimation, and a shift
    // pair, applied right to left.
    let g = GgElement::new(m, true, true, m.unit(2)?, m.residue(1), m.residue(4));
    println!("g            : {g}");
    println!("g⁻¹          : {}", g.inverse());

    let h = GgElement::parse(m, "s^0 d(3,0) c(2,0)")?;
    let gh = g.compose(&h)?;
    println!("g∘h          : {gh}");

    // The permutation representation is the independent referee: composing
    // permutations must land on the same element.
    let by_perms = g
        .to_pair_permutation()
        .compose(&h.to_pair_permutation())?;
    assert_eq!(gh.to_pair_permutation(), by_perms);
    println!("oracle       : permutation composition agrees");

    // Acting on a pair applies the shifts, then the decimations (the second
    // coordinate picks up the sign), then the switch.
    let p = SequencePair::parse("--+++:-+-++")?;
    println!("g({p})   = {}", g.act_pair(&p)?);

    // Group orders: 4·ℓ²·φ(ℓ) once ℓ ≥ 3.
    for ell in [1usize, 2, 3, 5, 7, 9, 11] {
        let modulus = Modulus::new(ell)?;
        println!(
            "length {ell:>2}: group order {}",
            GgElement::enumerate(modulus).len()
        );
    }
    Ok(())
}
