//! Orbits of sequences under shifts/decimations and of pairs under the full
//! pair group; canonical representatives and the equivalence predicate.
//!
//! Two pairs are equivalent exactly when they lie in the same orbit.  The
//! canonical representative of an orbit is its lexicographic minimum,
//! comparing the concatenation `u‖v` entrywise with `−1 < +1`.  That choice
//! is this crate's convention, not a property of the groups; it is stable,
//! total, and cheap to compare, which is what orbit deduplication needs.

use std::collections::BTreeSet;

use crate::group::{DElement, GgElement};
use crate::seqops::{Sequence, SequencePair};
use crate::Error;

/// Orbit members are materialized only up to this size unless a caller
/// overrides the cap.
pub const DEFAULT_MEMBER_CAP: usize = 10_000;

/// Summary of a pair orbit: canonical representative, size, stabilizer
/// order, and (below the cap) the members themselves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    pub representative: SequencePair,
    pub size: usize,
    pub stabilizer_order: usize,
    pub members: Option<Vec<SequencePair>>,
}

impl OrbitReport {
    /// Tab-separated serialization: `canonical-pair<TAB>size<TAB>stabilizer`.
    pub fn to_tsv_line(&self) -> String {
        format!(
            "{}\t{}\t{}",
            self.representative, self.size, self.stabilizer_order
        )
    }
}

/// The orbit of a single sequence under all shifts and decimations,
/// deduplicated, in lexicographic order.
pub fn decimation_class(v: &Sequence) -> Vec<Sequence> {
    let set: BTreeSet<Sequence> = DElement::enumerate(v.modulus())
        .iter()
        .map(|g| g.act_sequence(v).expect("modulus matches"))
        .collect();
    set.into_iter().collect()
}

fn full_orbit(p: &SequencePair) -> BTreeSet<SequencePair> {
    GgElement::enumerate(p.modulus())
        .iter()
        .map(|g| g.act_pair(p).expect("modulus matches"))
        .collect()
}

/// The orbit of a ±1 pair under the whole group.
///
/// `size · stabilizer_order` equals the (deduplicated) group order by
/// orbit–stabilizer; members are materialized when `size ≤ member_cap`.
pub fn pair_orbit(p: &SequencePair, member_cap: usize) -> Result<OrbitReport, Error> {
    p.require_signs()?;
    let orbit = full_orbit(p);
    let size = orbit.len();
    let group_order = GgElement::group_order(p.modulus());
    debug_assert_eq!(group_order % size, 0, "orbit size must divide group order");
    let representative = orbit.first().expect("orbit contains p").clone();
    let members = if size <= member_cap {
        Some(orbit.into_iter().collect())
    } else {
        None
    };
    Ok(OrbitReport {
        representative,
        size,
        stabilizer_order: group_order / size,
        members,
    })
}

/// The lexicographically smallest pair in the orbit of `p`.
pub fn canonical_pair(p: &SequencePair) -> Result<SequencePair, Error> {
    p.require_signs()?;
    let mut best: Option<SequencePair> = None;
    for g in GgElement::enumerate(p.modulus()) {
        let image = g.act_pair(p).expect("modulus matches");
        if best.as_ref().is_none_or(|b| image < *b) {
            best = Some(image);
        }
    }
    Ok(best.expect("group is nonempty"))
}

/// True iff the two pairs lie in the same orbit.
pub fn are_equivalent(p1: &SequencePair, p2: &SequencePair) -> Result<bool, Error> {
    if p1.modulus() != p2.modulus() {
        return Err(Error::LengthMismatch {
            left: p1.modulus().ell(),
            right: p2.modulus().ell(),
        });
    }
    Ok(canonical_pair(p1)? == canonical_pair(p2)?)
}
