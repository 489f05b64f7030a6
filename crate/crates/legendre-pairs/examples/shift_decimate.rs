//! Cyclic shifts, decimations, and how they interact: the composed action
//! `(a, b) = c_a ∘ d_b` and the exchange rule `c_a ∘ d_b = d_b ∘ c_{ab⁻¹}`.
//!
//! ```bash
//! cargo run --example shift_decimate
//! ```

use legendre_pairs::{DElement, Error, Sequence};

fn main() -> Result<(), Error> {
    let v = Sequence::parse_csv("0,1,2,3,4,5,6")?;
    let m = v.modulus();

    let shifted = v.cyclic_shift(m.residue(2));
    let decimated = v.decimate(m.unit(3)?);
    println!("v            : {}", v.csv_string());
    println!("c_2(v)       : {}", shifted.csv_string());
    println!("d_3(v)       : {} (entry i is v at i·3⁻¹)", decimated.csv_string());

    // One group element does both at once.
    let g = DElement::new(m, m.residue(2), m.unit(3)?);
    let both = g.act_sequence(&v)?;
    assert_eq!(both, decimated.cyclic_shift(m.residue(2)));
    println!("(2,3)(v)     : {}", both.csv_string());

    // Shifts and decimations do not commute; the exchange twists the shift.
    let a = m.residue(2);
    let b = m.unit(3)?;
    let shift_then_decimate = v.decimate(b).cyclic_shift(a);
    let ab_inv = m.mul(a, m.unit_inverse(b).as_residue());
    let decimate_then_twisted = v.cyclic_shift(ab_inv).decimate(b);
    assert_eq!(shift_then_decimate, decimate_then_twisted);
    println!(
        "exchange     : c_2∘d_3 = d_3∘c_{} (2·3⁻¹ = {} mod 7)",
        ab_inv.value(),
        ab_inv.value()
    );

    // Composition in coordinates: (a₁,b₁)(a₂,b₂) = (a₁+b₁a₂, b₁b₂).
    let h = DElement::new(m, m.residue(1), m.unit(2)?);
    let gh = g.compose(&h)?;
    println!(
        "composition  : (2,3)·(1,2) = ({},{})",
        gh.shift_part().value(),
        gh.decimation_part().value()
    );
    assert_eq!(gh.act_sequence(&v)?, g.act_sequence(&h.act_sequence(&v)?)?);

    let ginv = g.inverse();
    println!(
        "inverse      : (2,3)⁻¹ = ({},{})",
        ginv.shift_part().value(),
        ginv.decimation_part().value()
    );
    assert_eq!(g.compose(&ginv)?, DElement::identity(m));
    Ok(())
}
