//! Shared oracles for the integration suites.
//!
//! Everything here recomputes results from first principles — direct
//! summation, full scans, breadth-first closure over generator actions —
//! deliberately avoiding the library's composition rules, orbit machinery,
//! and pruned search, so the suites compare two genuinely independent
//! routes.

#![allow(dead_code)] // each integration test binary uses a different subset

use std::collections::{BTreeSet, VecDeque};

use legendre_pairs::{Modulus, Sequence, SequencePair};

/// `Σ_i v_i · v_{i−j}` by direct summation, for `j < ℓ`.
pub fn naive_paf(entries: &[i64], j: usize) -> i64 {
    let ell = entries.len();
    (0..ell)
        .map(|i| entries[i] * entries[(i + ell - j) % ell])
        .sum()
}

/// The Legendre-pair definition applied literally.
pub fn is_lp_by_definition(u: &[i64], v: &[i64]) -> bool {
    if u.iter().sum::<i64>() != v.iter().sum::<i64>() {
        return false;
    }
    (1..u.len()).all(|j| naive_paf(u, j) + naive_paf(v, j) == -2)
}

fn entries_from_bits(ell: usize, bits: u64) -> Vec<i64> {
    (0..ell)
        .map(|i| if bits >> i & 1 == 1 { 1 } else { -1 })
        .collect()
}

/// Unpruned oracle: scan all `4^ℓ` ±1 pairs against the raw definition.
pub fn brute_force_lps(ell: usize) -> Vec<SequencePair> {
    let m = Modulus::new(ell).unwrap();
    let mut found = Vec::new();
    for u_bits in 0..1u64 << ell {
        let u = entries_from_bits(ell, u_bits);
        for v_bits in 0..1u64 << ell {
            let v = entries_from_bits(ell, v_bits);
            if is_lp_by_definition(&u, &v) {
                found.push(
                    SequencePair::new(
                        Sequence::new(m, u.clone()).unwrap(),
                        Sequence::new(m, v).unwrap(),
                    )
                    .unwrap(),
                );
            }
        }
    }
    found.sort();
    found
}

/// Generator actions on a pair, from sequence primitives only: the two
/// one-step shifts, the plain and sign-flipped decimations, and the switch.
fn generator_images(p: &SequencePair) -> Vec<SequencePair> {
    let m = p.modulus();
    let one = m.residue(1);
    let zero = m.residue(0);
    let mut images = vec![
        SequencePair::new(p.u().cyclic_shift(one), p.v().cyclic_shift(zero)).unwrap(),
        SequencePair::new(p.u().cyclic_shift(zero), p.v().cyclic_shift(one)).unwrap(),
        p.swapped(),
    ];
    for k in m.units() {
        images.push(SequencePair::new(p.u().decimate(k), p.v().decimate(k)).unwrap());
    }
    let minus_one = m.unit(-1).unwrap();
    images.push(SequencePair::new(p.u().clone(), p.v().decimate(minus_one)).unwrap());
    images
}

/// Breadth-first orbit closure under the generator actions.
pub fn orbit_closure(p: &SequencePair) -> BTreeSet<SequencePair> {
    let mut seen: BTreeSet<SequencePair> = BTreeSet::new();
    let mut queue: VecDeque<SequencePair> = VecDeque::new();
    seen.insert(p.clone());
    queue.push_back(p.clone());
    while let Some(current) = queue.pop_front() {
        for image in generator_images(&current) {
            if seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    seen
}

/// Classify by closure alone: repeatedly take the smallest unassigned pair
/// and sweep out its orbit.  Panics if an orbit escapes `lps`.
pub fn classify_by_closure(lps: &[SequencePair]) -> Vec<(SequencePair, usize)> {
    let all: BTreeSet<&SequencePair> = lps.iter().collect();
    let mut assigned: BTreeSet<&SequencePair> = BTreeSet::new();
    let mut classes = Vec::new();
    for pair in lps {
        if assigned.contains(pair) {
            continue;
        }
        let orbit = orbit_closure(pair);
        for member in &orbit {
            assert!(
                all.contains(member),
                "orbit member {member} is not a Legendre pair"
            );
        }
        for member in &orbit {
            assigned.insert(all.get(member).unwrap());
        }
        classes.push((pair.clone(), orbit.len()));
    }
    classes
}

/// Direct equivalence: some choice of switch exponent, sign, decimation,
/// and shifts maps `p1` onto `p2`, all built from sequence primitives.
pub fn equivalent_by_direct_scan(p1: &SequencePair, p2: &SequencePair) -> bool {
    let m = p1.modulus();
    for f in [false, true] {
        for r in [false, true] {
            for k in m.units() {
                let k_v = if r { m.neg_unit(k) } else { k };
                for i in 0..m.ell() {
                    for j in 0..m.ell() {
                        let u2 = p1.u().cyclic_shift(m.residue(i as i64)).decimate(k);
                        let v2 = p1.v().cyclic_shift(m.residue(j as i64)).decimate(k_v);
                        let image = SequencePair::new(u2, v2).unwrap();
                        let image = if f { image.swapped() } else { image };
                        if &image == p2 {
                            return true;
                        }
                    }
                }
            }
        }
    }
    false
}

/// The quadratic-residue pair at an odd prime `ℓ ≡ 3 (mod 4)`:
/// `u = v`, `u_0 = −1`, `u_i = +1` iff `i` is a nonzero square mod `ℓ`.
pub fn quadratic_residue_pair(ell: usize) -> SequencePair {
    let m = Modulus::new(ell).unwrap();
    let mut is_square = vec![false; ell];
    for x in 1..ell {
        is_square[x * x % ell] = true;
    }
    let entries: Vec<i64> = (0..ell)
        .map(|i| if i != 0 && is_square[i] { 1 } else { -1 })
        .collect();
    let u = Sequence::new(m, entries).unwrap();
    SequencePair::new(u.clone(), u).unwrap()
}

/// All `2^ℓ · 2^ℓ` ±1 pairs of length `ℓ`.
pub fn all_sign_pairs(ell: usize) -> Vec<SequencePair> {
    let m = Modulus::new(ell).unwrap();
    let mut out = Vec::new();
    for u_bits in 0..1u64 << ell {
        for v_bits in 0..1u64 << ell {
            out.push(
                SequencePair::new(Sequence::from_bits(m, u_bits), Sequence::from_bits(m, v_bits))
                    .unwrap(),
            );
        }
    }
    out
}
