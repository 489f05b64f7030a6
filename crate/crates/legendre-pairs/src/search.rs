//! Exhaustive, symmetry-aware enumeration and classification of all
//! Legendre pairs of a given length.
//!
//! Candidate generation uses the sum constraint: summing the defining lag
//! conditions over all nonzero lags gives `(1ᵀu)² + (1ᵀv)² = 2`, so both
//! column sums are ±1 and equal.  Candidates are therefore the
//! `C(ℓ, (ℓ∓1)/2)` bitmasks of each sum sign, with the second coordinate
//! filtered against the lag-by-lag requirement
//! `PAF(v, j) = −2 − PAF(u, j)` before the exact predicate runs.  Even
//! lengths admit no ±1 vector with sum ±1 and legally yield an empty result.
//!
//! Both sum signs are searched: the symmetry group never negates entries, so
//! `+1`-sum pairs form their own orbits and would be lost otherwise.
//!
//! Search work is sharded over the first coordinate's candidate index;
//! results are merged and sorted before emission, so output is deterministic
//! regardless of worker count.

use std::collections::HashMap;

use crate::modring::Modulus;
use crate::orbits::{self, DEFAULT_MEMBER_CAP};
use crate::seqops::{is_legendre_pair, Sequence, SequencePair};
use crate::Error;

/// Candidates are packed into `u64` bitmasks, which bounds the length; the
/// practical ceiling for a full classification on one desktop is ℓ ≈ 13.
pub const SEARCH_LENGTH_LIMIT: usize = 63;

/// What a search invocation should produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Only the number of Legendre pairs.
    CountOnly,
    /// One canonical representative per equivalence class.
    Representatives,
    /// Every Legendre pair.
    Full,
}

/// Parameters for a search run.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub m: Modulus,
    pub mode: SearchMode,
    pub workers: usize,
    pub orbit_member_cap: usize,
}

impl SearchConfig {
    pub fn new(m: Modulus) -> SearchConfig {
        SearchConfig {
            m,
            mode: SearchMode::Full,
            workers: 1,
            orbit_member_cap: DEFAULT_MEMBER_CAP,
        }
    }

    pub fn with_workers(mut self, workers: usize) -> SearchConfig {
        self.workers = workers.max(1);
        self
    }

    pub fn with_mode(mut self, mode: SearchMode) -> SearchConfig {
        self.mode = mode;
        self
    }
}

/// Per-length census: every class's canonical representative and orbit
/// size, plus the total count they partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub ell: usize,
    pub total_lps: usize,
    pub classes: Vec<(SequencePair, usize)>,
}

impl ClassificationReport {
    /// `ell<TAB>total<TAB>classes` header, then one `pair<TAB>size` line per
    /// class.
    pub fn render(&self) -> String {
        let mut out = format!("{}\t{}\t{}\n", self.ell, self.total_lps, self.classes.len());
        for (rep, size) in &self.classes {
            out.push_str(&format!("{rep}\t{size}\n"));
        }
        out
    }

    /// The partition checksum: orbit sizes must sum to the total.
    pub fn checksum_ok(&self) -> bool {
        self.total_lps == self.classes.iter().map(|(_, size)| size).sum::<usize>()
    }
}

/// All bitmasks of `ell` bits with exactly `ones` bits set, ascending.
fn masks_with_popcount(ell: usize, ones: usize) -> Vec<u64> {
    if ones == 0 {
        return vec![0];
    }
    let top = 1u64 << ell;
    let mut out = Vec::new();
    let mut mask = (1u64 << ones) - 1;
    while mask < top {
        out.push(mask);
        // Gosper's hack: next mask with the same popcount.
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    out
}

/// `PAF` at lags `1..ℓ` straight from the bitmask: equal bits agree, so
/// `PAF(j) = ℓ − 2·popcount(x ⊕ rot_j(x))`.
fn paf_tail(bits: u64, ell: usize) -> Vec<i64> {
    let mask = if ell == 64 { u64::MAX } else { (1u64 << ell) - 1 };
    (1..ell)
        .map(|j| {
            let rotated = ((bits << j) | (bits >> (ell - j))) & mask;
            let disagreements = ((bits ^ rotated) & mask).count_ones() as i64;
            ell as i64 - 2 * disagreements
        })
        .collect()
}

struct SignClass {
    masks: Vec<u64>,
    tails: Vec<Vec<i64>>,
}

fn sign_classes(ell: usize) -> Vec<SignClass> {
    let mut classes = Vec::new();
    for sum in [-1i64, 1] {
        let twice_ones = ell as i64 + sum;
        if twice_ones % 2 != 0 || twice_ones < 0 {
            continue; // even ℓ: sum ±1 is unattainable
        }
        let masks = masks_with_popcount(ell, (twice_ones / 2) as usize);
        let tails = masks.iter().map(|&bits| paf_tail(bits, ell)).collect();
        classes.push(SignClass { masks, tails });
    }
    classes
}

fn pairs_for_candidate(m: Modulus, class: &SignClass, u_index: usize) -> Vec<SequencePair> {
    let needed: Vec<i64> = class.tails[u_index].iter().map(|paf| -2 - paf).collect();
    let u = Sequence::from_bits(m, class.masks[u_index]);
    let mut found = Vec::new();
    for (v_index, tail) in class.tails.iter().enumerate() {
        // lag-by-lag feasibility with early exit
        if tail != &needed {
            continue;
        }
        let pair = SequencePair::new(u.clone(), Sequence::from_bits(m, class.masks[v_index]))
            .expect("equal lengths");
        // The pruning is only a filter; the exact predicate decides.
        if is_legendre_pair(&pair).expect("±1 by construction") {
            found.push(pair);
        }
    }
    found
}

/// Every Legendre pair of length `ℓ`, each exactly once, in lexicographic
/// order.  Even lengths yield an empty list.
pub fn enumerate_lps(cfg: &SearchConfig) -> Result<Vec<SequencePair>, Error> {
    let ell = cfg.m.ell();
    if ell > SEARCH_LENGTH_LIMIT {
        return Err(Error::SearchLimit {
            ell,
            limit: SEARCH_LENGTH_LIMIT,
        });
    }
    let mut results: Vec<SequencePair> = Vec::new();
    for class in sign_classes(ell) {
        let workers = cfg.workers.max(1).min(class.masks.len().max(1));
        if workers <= 1 {
            for u_index in 0..class.masks.len() {
                results.extend(pairs_for_candidate(cfg.m, &class, u_index));
            }
        } else {
            let class_ref = &class;
            let found = std::thread::scope(|scope| {
                let handles: Vec<_> = (0..workers)
                    .map(|worker| {
                        scope.spawn(move || {
                            let mut local = Vec::new();
                            let mut u_index = worker;
                            while u_index < class_ref.masks.len() {
                                local.extend(pairs_for_candidate(cfg.m, class_ref, u_index));
                                u_index += workers;
                            }
                            local
                        })
                    })
                    .collect();
                handles
                    .into_iter()
                    .flat_map(|h| h.join().expect("search worker panicked"))
                    .collect::<Vec<_>>()
            });
            results.extend(found);
        }
    }
    results.sort();
    Ok(results)
}

/// Partition all Legendre pairs of length `ℓ` into equivalence classes.
///
/// Classes are listed by ascending canonical representative; each
/// representative is the lexicographic minimum of its orbit, and orbit sizes
/// sum to the total.
pub fn classify_lps(cfg: &SearchConfig) -> Result<ClassificationReport, Error> {
    let lps = enumerate_lps(cfg)?;
    let mut position: HashMap<&SequencePair, usize> = HashMap::with_capacity(lps.len());
    for (idx, pair) in lps.iter().enumerate() {
        position.insert(pair, idx);
    }
    let mut assigned = vec![false; lps.len()];
    let mut classes = Vec::new();
    for start in 0..lps.len() {
        if assigned[start] {
            continue;
        }
        // The smallest unassigned pair is the lexicographic minimum of its
        // orbit, hence canonical.
        let report = orbits::pair_orbit(&lps[start], usize::MAX)?;
        debug_assert_eq!(report.representative, lps[start]);
        let members = report.members.as_ref().expect("cap is unbounded here");
        for member in members {
            let &idx = position
                .get(member)
                .expect("orbit of a Legendre pair contains only Legendre pairs");
            assigned[idx] = true;
        }
        classes.push((lps[start].clone(), report.size));
    }
    let report = ClassificationReport {
        ell: cfg.m.ell(),
        total_lps: lps.len(),
        classes,
    };
    debug_assert!(report.checksum_ok());
    Ok(report)
}

/// Emit exactly the canonical representatives, with no post-hoc
/// classification: a pair is kept iff it is a Legendre pair equal to its own
/// canonical form.  Produces the same list as [`classify_lps`]'s classes.
pub fn search_canonical_only(cfg: &SearchConfig) -> Result<Vec<SequencePair>, Error> {
    let mut reps = Vec::new();
    for pair in enumerate_lps(cfg)? {
        if orbits::canonical_pair(&pair)? == pair {
            reps.push(pair);
        }
    }
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::are_equivalent;
    use crate::seqops::check_legendre_pair;

    fn cfg(ell: usize) -> SearchConfig {
        SearchConfig::new(Modulus::new(ell).unwrap())
    }

    // Unpruned oracle: scan all 4^ℓ pairs with the definition alone.
    fn brute_force_lps(ell: usize) -> Vec<SequencePair> {
        let m = Modulus::new(ell).unwrap();
        let mut found = Vec::new();
        for u_bits in 0..1u64 << ell {
            for v_bits in 0..1u64 << ell {
                let pair = SequencePair::new(
                    Sequence::from_bits(m, u_bits),
                    Sequence::from_bits(m, v_bits),
                )
                .unwrap();
                if is_legendre_pair(&pair).unwrap() {
                    found.push(pair);
                }
            }
        }
        found.sort();
        found
    }

    #[test]
    fn masks_enumerate_combinations() {
        assert_eq!(masks_with_popcount(3, 0), vec![0]);
        assert_eq!(masks_with_popcount(3, 2), vec![0b011, 0b101, 0b110]);
        assert_eq!(masks_with_popcount(5, 2).len(), 10);
        assert_eq!(masks_with_popcount(13, 6).len(), 1716);
    }

    #[test]
    fn paf_tail_matches_sequence_paf() {
        let m = Modulus::new(7).unwrap();
        for bits in [0b0010110u64, 0b1010101, 0b0000001] {
            let seq = Sequence::from_bits(m, bits);
            let expected: Vec<i64> = seq.paf_spectrum()[1..].to_vec();
            assert_eq!(paf_tail(bits, 7), expected);
        }
    }

    #[test]
    fn length_one_has_the_two_constant_pairs() {
        let lps = enumerate_lps(&cfg(1)).unwrap();
        let texts: Vec<String> = lps.iter().map(|p| p.to_string()).collect();
        assert_eq!(texts, vec!["-:-", "+:+"]);
    }

    #[test]
    fn even_lengths_are_empty() {
        for ell in [2, 4, 6, 8] {
            assert!(enumerate_lps(&cfg(ell)).unwrap().is_empty(), "ell={ell}");
        }
        // length 4 confirmed against the full 256-pair scan
        assert!(brute_force_lps(4).is_empty());
    }

    #[test]
    fn pruned_search_matches_brute_force() {
        for ell in [1, 2, 3, 4, 5] {
            assert_eq!(enumerate_lps(&cfg(ell)).unwrap(), brute_force_lps(ell), "ell={ell}");
        }
    }

    #[test]
    fn small_search_contains_quadratic_residue_pair() {
        let qr = SequencePair::parse("-+-:-+-").unwrap();
        assert!(enumerate_lps(&cfg(3)).unwrap().contains(&qr));
    }

    #[test]
    fn every_lp_has_unit_column_sums() {
        for ell in [1, 3, 5, 7] {
            for pair in enumerate_lps(&cfg(ell)).unwrap() {
                let u_sum = pair.u().column_sum();
                let v_sum = pair.v().column_sum();
                assert_eq!(u_sum, v_sum);
                assert_eq!(u_sum * u_sum + v_sum * v_sum, 2);
            }
        }
    }

    #[test]
    fn classification_is_a_partition_of_valid_canonical_reps() {
        for ell in [3usize, 5] {
            let report = classify_lps(&cfg(ell)).unwrap();
            assert!(report.checksum_ok());
            for (rep, _) in &report.classes {
                assert_eq!(
                    check_legendre_pair(rep).unwrap(),
                    crate::seqops::LpVerdict::LegendrePair
                );
                assert_eq!(&orbits::canonical_pair(rep).unwrap(), rep);
            }
            for (a, _) in &report.classes {
                for (b, _) in &report.classes {
                    if a != b {
                        assert!(!are_equivalent(a, b).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_only_matches_classification() {
        for ell in [3usize, 4, 5] {
            let reps = search_canonical_only(&cfg(ell)).unwrap();
            let classes: Vec<SequencePair> = classify_lps(&cfg(ell))
                .unwrap()
                .classes
                .into_iter()
                .map(|(rep, _)| rep)
                .collect();
            assert_eq!(reps, classes, "ell={ell}");
        }
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let single = enumerate_lps(&cfg(5)).unwrap();
        let multi = enumerate_lps(&cfg(5).with_workers(4)).unwrap();
        assert_eq!(single, multi);
        let r1 = classify_lps(&cfg(7)).unwrap();
        let r4 = classify_lps(&cfg(7).with_workers(4)).unwrap();
        assert_eq!(r1.render(), r4.render());
    }

    #[test]
    fn rejects_lengths_beyond_the_packed_limit() {
        assert_eq!(
            enumerate_lps(&cfg(64)),
            Err(Error::SearchLimit { ell: 64, limit: 63 })
        );
    }
}
