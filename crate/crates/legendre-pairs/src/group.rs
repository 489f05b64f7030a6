//! The shift/decimation group on sequences and the full equivalence group on
//! pairs, in exact normal form.
//!
//! Single sequences carry an action of the group `D` generated by cyclic
//! shifts and decimations; an element is written `(a, b)` for the map
//! `c_a ∘ d_b`, and composition follows the semidirect-product rule
//! `(a₁, b₁)(a₂, b₂) = (a₁ + b₁a₂, b₁b₂)`.
//!
//! Ordered pairs carry an action of the larger group generated by
//!
//! * paired shifts `(c_i, c_j)`,
//! * signed paired decimations `(d_k, ±1)` sending `(u, v)` to
//!   `(d_k(u), d_{±k}(v))`,
//! * the switch `s(u, v) = (v, u)`.
//!
//! Every element of that group factors uniquely as
//! `s^f ∘ (d_k, (−1)^r) ∘ (c_i, c_j)`, which is the normal form stored in
//! [`GgElement`].  Composition and inversion rewrite products back into this
//! form with the exchange relations
//!
//! ```text
//! (c_i, c_j) s            = s (c_j, c_i)
//! (d_k, (−1)^r) s         = s (d_{(−1)^r k}, (−1)^r)
//! (c_i, c_j)(d_k, (−1)^r) = (d_k, (−1)^r)(c_{ik⁻¹}, c_{j(−1)^r k⁻¹})
//! ```
//!
//! so composing is O(1) and exact.  A faithful permutation representation on
//! the `2ℓ` coordinate positions ([`PairPermutation`]) provides an
//! independent oracle for the rewrite rules; for `ℓ ≤ 2` (where distinct
//! tuples can denote equal maps because `−1 ≡ 1`) element equality and
//! enumeration fall back to it.

use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::modring::{Modulus, Residue, Unit};
use crate::seqops::{Sequence, SequencePair};
use crate::Error;

/// An element `(a, b)` of the shift/decimation group on single sequences,
/// denoting the map `c_a ∘ d_b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DElement {
    m: Modulus,
    a: Residue,
    b: Unit,
}

/// A pair-group element in normal form `s^f ∘ (d_k, (−1)^r) ∘ (c_i, c_j)`.
///
/// Applied to a pair, the rightmost factor acts first: shift the coordinates
/// by `(i, j)`, decimate by `(k, (−1)^r k)`, then swap iff `f`.
#[derive(Debug, Clone, Copy)]
pub struct GgElement {
    m: Modulus,
    f: bool,
    r: bool,
    k: Unit,
    i: Residue,
    j: Residue,
}

/// A permutation of the `2ℓ` coordinate positions of a pair; positions
/// `0..ℓ` address `u`, positions `ℓ..2ℓ` address `v`.
///
/// `image[x]` is the input position whose value lands at output position
/// `x`, so applying is `out[x] = in[image[x]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairPermutation {
    m: Modulus,
    image: Vec<u32>,
}

fn check_modulus(left: Modulus, right: Modulus) -> Result<(), Error> {
    if left != right {
        return Err(Error::ModulusMismatch {
            left: left.ell(),
            right: right.ell(),
        });
    }
    Ok(())
}

impl DElement {
    pub fn new(m: Modulus, a: Residue, b: Unit) -> DElement {
        DElement { m, a, b }
    }

    pub fn identity(m: Modulus) -> DElement {
        DElement {
            m,
            a: m.zero(),
            b: m.one_unit(),
        }
    }

    pub fn modulus(&self) -> Modulus {
        self.m
    }

    pub fn shift_part(&self) -> Residue {
        self.a
    }

    pub fn decimation_part(&self) -> Unit {
        self.b
    }

    /// The index action `(a, b)·x = a + b·x`.
    pub fn act_index(&self, x: Residue) -> Residue {
        self.m.add(self.a, self.m.mul(self.b.as_residue(), x))
    }

    /// `self` applied after `other`: `(a₁ + b₁a₂, b₁b₂)`.
    pub fn compose(&self, other: &DElement) -> Result<DElement, Error> {
        check_modulus(self.m, other.m)?;
        let a = self
            .m
            .add(self.a, self.m.mul(self.b.as_residue(), other.a));
        let b = self.m.mul_unit(self.b, other.b);
        Ok(DElement { m: self.m, a, b })
    }

    /// `(−b⁻¹a, b⁻¹)`; composing either way gives the identity.
    pub fn inverse(&self) -> DElement {
        let binv = self.m.unit_inverse(self.b);
        let a = self.m.neg(self.m.mul(binv.as_residue(), self.a));
        DElement {
            m: self.m,
            a,
            b: binv,
        }
    }

    /// The sequence action: entry `x` of the result is entry `(x−a)b⁻¹` of
    /// the input, i.e. `cyclic_shift(decimate(v, b), a)`.
    pub fn act_sequence(&self, v: &Sequence) -> Result<Sequence, Error> {
        check_modulus(self.m, v.modulus())?;
        Ok(v.decimate(self.b).cyclic_shift(self.a))
    }

    /// All `ℓ·phi(ℓ)` elements, ordered by `(a, b)`.
    pub fn enumerate(m: Modulus) -> Vec<DElement> {
        let units = m.units();
        let mut out = Vec::with_capacity(m.ell() * units.len());
        for a in 0..m.ell() {
            for &b in &units {
                out.push(DElement {
                    m,
                    a: m.residue(a as i64),
                    b,
                });
            }
        }
        out
    }

    /// Source map of the sequence action on `ℓ` points.
    pub fn to_index_permutation(&self) -> Vec<u32> {
        let ell = self.m.ell();
        let binv = self.m.unit_inverse(self.b).value();
        (0..ell)
            .map(|x| (((x + ell - self.a.value()) % ell) * binv % ell) as u32)
            .collect()
    }
}

impl fmt::Display for DElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c({}) d({})", self.a.value(), self.b.value())
    }
}

impl GgElement {
    pub fn new(m: Modulus, f: bool, r: bool, k: Unit, i: Residue, j: Residue) -> GgElement {
        GgElement { m, f, r, k, i, j }
    }

    pub fn identity(m: Modulus) -> GgElement {
        GgElement {
            m,
            f: false,
            r: false,
            k: m.one_unit(),
            i: m.zero(),
            j: m.zero(),
        }
    }

    /// The pure switch `s`.
    pub fn switch(m: Modulus) -> GgElement {
        GgElement {
            f: true,
            ..GgElement::identity(m)
        }
    }

    /// The paired shift `(c_i, c_j)`.
    pub fn shift_pair(m: Modulus, i: Residue, j: Residue) -> GgElement {
        GgElement {
            i,
            j,
            ..GgElement::identity(m)
        }
    }

    /// The signed paired decimation `(d_k, (−1)^r)`.
    pub fn decimation_pair(m: Modulus, k: Unit, r: bool) -> GgElement {
        GgElement {
            k,
            r,
            ..GgElement::identity(m)
        }
    }

    pub fn modulus(&self) -> Modulus {
        self.m
    }

    pub fn switch_exponent(&self) -> bool {
        self.f
    }

    pub fn sign_exponent(&self) -> bool {
        self.r
    }

    pub fn decimation(&self) -> Unit {
        self.k
    }

    pub fn shift_u(&self) -> Residue {
        self.i
    }

    pub fn shift_v(&self) -> Residue {
        self.j
    }

    /// The decimation applied to the second coordinate: `(−1)^r k`.
    pub fn decimation_v(&self) -> Unit {
        if self.r {
            self.m.neg_unit(self.k)
        } else {
            self.k
        }
    }

    /// The pair action: `(u, v) ↦ s^f (d_k(c_i(u)), d_{(−1)^r k}(c_j(v)))`.
    pub fn act_pair(&self, p: &SequencePair) -> Result<SequencePair, Error> {
        check_modulus(self.m, p.modulus())?;
        let u = p.u().cyclic_shift(self.i).decimate(self.k);
        let v = p.v().cyclic_shift(self.j).decimate(self.decimation_v());
        let out = SequencePair::new(u, v)?;
        Ok(if self.f { out.swapped() } else { out })
    }

    /// `self` applied after `other`, rewritten back into normal form.
    pub fn compose(&self, other: &GgElement) -> Result<GgElement, Error> {
        check_modulus(self.m, other.m)?;
        let m = self.m;

        // Push other's switch left through self's shift and decimation
        // parts: the shifts swap coordinates, the decimation picks up the
        // sign (−1)^r on its index.
        let (i1, j1, k1) = if other.f {
            let k1 = if self.r { m.neg_unit(self.k) } else { self.k };
            (self.j, self.i, k1)
        } else {
            (self.i, self.j, self.k)
        };

        // Conjugate self's (now possibly swapped) shifts through other's
        // decimation part, then absorb other's shifts additively.
        let k2inv = m.unit_inverse(other.k);
        let i_conj = m.mul(i1, k2inv.as_residue());
        let j_scaled = m.mul(j1, k2inv.as_residue());
        let j_conj = if other.r { m.neg(j_scaled) } else { j_scaled };

        Ok(GgElement {
            m,
            f: self.f ^ other.f,
            r: self.r ^ other.r,
            k: m.mul_unit(k1, other.k),
            i: m.add(i_conj, other.i),
            j: m.add(j_conj, other.j),
        })
    }

    /// The inverse in normal form, assembled as
    /// `(c_i, c_j)⁻¹ ∘ (d_k, (−1)^r)⁻¹ ∘ s^f` and rewritten by `compose`.
    pub fn inverse(&self) -> GgElement {
        let m = self.m;
        let shifts_inv = GgElement {
            m,
            f: false,
            r: false,
            k: m.one_unit(),
            i: m.neg(self.i),
            j: m.neg(self.j),
        };
        let decimation_inv = GgElement {
            m,
            f: false,
            r: self.r,
            k: m.unit_inverse(self.k),
            i: m.zero(),
            j: m.zero(),
        };
        let switch_part = GgElement {
            m,
            f: self.f,
            r: false,
            k: m.one_unit(),
            i: m.zero(),
            j: m.zero(),
        };
        shifts_inv
            .compose(&decimation_inv)
            .and_then(|g| g.compose(&switch_part))
            .expect("moduli agree by construction")
    }

    /// All distinct group elements in lexicographic `(f, r, k, i, j)` order.
    ///
    /// For `ℓ ≥ 3` the normal form is faithful and this is all
    /// `4·ℓ²·phi(ℓ)` tuples; for `ℓ ≤ 2` tuples denoting equal maps are
    /// deduplicated by their permutation, keeping the first.
    pub fn enumerate(m: Modulus) -> Vec<GgElement> {
        let ell = m.ell();
        let units = m.units();
        let mut out = Vec::with_capacity(4 * ell * ell * units.len());
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        for f in [false, true] {
            for r in [false, true] {
                for &k in &units {
                    for i in 0..ell {
                        for j in 0..ell {
                            let g = GgElement {
                                m,
                                f,
                                r,
                                k,
                                i: m.residue(i as i64),
                                j: m.residue(j as i64),
                            };
                            if ell <= 2 && !seen.insert(g.to_pair_permutation().image) {
                                continue;
                            }
                            out.push(g);
                        }
                    }
                }
            }
        }
        out
    }

    /// The order of the enumerated group: `4ℓ²phi(ℓ)` for `ℓ ≥ 3`.
    pub fn group_order(m: Modulus) -> usize {
        if m.ell() >= 3 {
            4 * m.ell() * m.ell() * m.phi()
        } else {
            GgElement::enumerate(m).len()
        }
    }

    /// The coordinate permutation realizing this element's pair action.
    pub fn to_pair_permutation(&self) -> PairPermutation {
        let perm = PairPermutation::decimation_pair(self.m, self.k, self.r)
            .compose(&PairPermutation::shift_pair(self.m, self.i, self.j))
            .expect("moduli agree");
        if self.f {
            PairPermutation::switch(self.m)
                .compose(&perm)
                .expect("moduli agree")
        } else {
            perm
        }
    }

    fn tuple(&self) -> (bool, bool, usize, usize, usize) {
        (
            self.f,
            self.r,
            self.k.value(),
            self.i.value(),
            self.j.value(),
        )
    }

    /// Strict parse of the text form emitted by `Display`.
    pub fn parse(m: Modulus, text: &str) -> Result<GgElement, Error> {
        let bad = |msg: &str| Error::Parse(format!("{msg} in {text:?}"));
        let parts: Vec<&str> = text.split_whitespace().collect();
        if parts.len() != 3 {
            return Err(bad("expected \"s^f d(k,r) c(i,j)\""));
        }
        let f = match parts[0] {
            "s^0" => false,
            "s^1" => true,
            _ => return Err(bad("bad switch part")),
        };
        let parse_pair = |part: &str, tag: &str| -> Result<(i64, i64), Error> {
            let inner = part
                .strip_prefix(tag)
                .and_then(|rest| rest.strip_prefix('('))
                .and_then(|rest| rest.strip_suffix(')'))
                .ok_or_else(|| bad("bad component"))?;
            let (x, y) = inner.split_once(',').ok_or_else(|| bad("bad component"))?;
            let x = x.trim().parse().map_err(|_| bad("bad integer"))?;
            let y = y.trim().parse().map_err(|_| bad("bad integer"))?;
            Ok((x, y))
        };
        let (k, r) = parse_pair(parts[1], "d")?;
        let (i, j) = parse_pair(parts[2], "c")?;
        let r = match r {
            0 => false,
            1 => true,
            _ => return Err(bad("sign exponent must be 0 or 1")),
        };
        let ell = m.ell() as i64;
        if !(0..ell).contains(&k) || !(0..ell).contains(&i) || !(0..ell).contains(&j) {
            return Err(bad("component out of range"));
        }
        Ok(GgElement {
            m,
            f,
            r,
            k: m.unit(k)?,
            i: m.residue(i),
            j: m.residue(j),
        })
    }
}

impl fmt::Display for GgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "s^{} d({},{}) c({},{})",
            self.f as u8,
            self.k.value(),
            self.r as u8,
            self.i.value(),
            self.j.value()
        )
    }
}

// Equality is tuple equality where the normal form is faithful (ℓ ≥ 3) and
// permutation equality in the degenerate regime below.
impl PartialEq for GgElement {
    fn eq(&self, other: &Self) -> bool {
        if self.m != other.m {
            return false;
        }
        if self.m.ell() >= 3 {
            self.tuple() == other.tuple()
        } else {
            self.to_pair_permutation() == other.to_pair_permutation()
        }
    }
}

impl Eq for GgElement {}

impl Hash for GgElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.m.hash(state);
        if self.m.ell() >= 3 {
            self.tuple().hash(state);
        } else {
            self.to_pair_permutation().image.hash(state);
        }
    }
}

impl PairPermutation {
    pub fn identity(m: Modulus) -> PairPermutation {
        PairPermutation {
            m,
            image: (0..2 * m.ell() as u32).collect(),
        }
    }

    /// Exchanges position `t` with `t + ℓ` for every `t`.
    pub fn switch(m: Modulus) -> PairPermutation {
        let ell = m.ell();
        let image = (0..2 * ell).map(|x| ((x + ell) % (2 * ell)) as u32).collect();
        PairPermutation { m, image }
    }

    /// The paired shift `(c_i, c_j)` as a coordinate permutation.
    pub fn shift_pair(m: Modulus, i: Residue, j: Residue) -> PairPermutation {
        let ell = m.ell();
        let mut image = Vec::with_capacity(2 * ell);
        for x in 0..ell {
            image.push(((x + ell - i.value()) % ell) as u32);
        }
        for x in 0..ell {
            image.push((ell + (x + ell - j.value()) % ell) as u32);
        }
        PairPermutation { m, image }
    }

    /// The signed paired decimation `(d_k, (−1)^r)` as a coordinate
    /// permutation.
    pub fn decimation_pair(m: Modulus, k: Unit, r: bool) -> PairPermutation {
        let ell = m.ell();
        let kinv = m.unit_inverse(k).value();
        let vinv = if r { (ell - kinv) % ell } else { kinv };
        let mut image = Vec::with_capacity(2 * ell);
        for x in 0..ell {
            image.push((x * kinv % ell) as u32);
        }
        for x in 0..ell {
            image.push((ell + x * vinv % ell) as u32);
        }
        PairPermutation { m, image }
    }

    pub fn modulus(&self) -> Modulus {
        self.m
    }

    pub fn image(&self) -> &[u32] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(x, &y)| x as u32 == y)
    }

    /// `self` applied after `other`.
    pub fn compose(&self, other: &PairPermutation) -> Result<PairPermutation, Error> {
        check_modulus(self.m, other.m)?;
        let image = self
            .image
            .iter()
            .map(|&mid| other.image[mid as usize])
            .collect();
        Ok(PairPermutation { m: self.m, image })
    }

    pub fn inverse(&self) -> PairPermutation {
        let mut image = vec![0u32; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            image[y as usize] = x as u32;
        }
        PairPermutation { m: self.m, image }
    }

    /// Apply to a pair through the concatenated-coordinates view.
    pub fn apply(&self, p: &SequencePair) -> Result<SequencePair, Error> {
        check_modulus(self.m, p.modulus())?;
        let input = p.concat_entries();
        let output: Vec<i64> = self.image.iter().map(|&src| input[src as usize]).collect();
        SequencePair::from_concat(self.m, &output)
    }
}
