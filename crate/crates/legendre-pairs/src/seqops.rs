//! Sequences indexed by `Z_ℓ`: periodic autocorrelation, cyclic shifts,
//! decimations, and the Legendre-pair predicate.
//!
//! Entries are exact integers.  The periodic autocorrelation function of `v`
//! at lag `j` is `PAF(v, j) = Σ_i v_i · v_{i−j}` with indices mod `ℓ`.  A
//! pair `(u, v)` of ±1 sequences is a Legendre pair when the column sums
//! agree and `PAF(u, j) + PAF(v, j) = −2` at every lag `j ≠ 0`.
//!
//! The FFT spectrum path is the one place floating point appears; it rounds
//! back to integers and self-reports its pre-rounding deviation so callers
//! can insist on exactness.

use std::fmt;

use rustfft::{num_complex::Complex, FftPlanner};

use crate::modring::{Modulus, Residue, Unit};
use crate::Error;

/// An exact-integer vector indexed by `Z_ℓ`.
///
/// Ordering is entrywise lexicographic (so for ±1 entries, `−1 < +1`), which
/// is the order every canonical form in this crate is defined against.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequence {
    m: Modulus,
    entries: Vec<i64>,
}

/// An ordered pair of equal-length sequences — the object the full symmetry
/// group acts on.  Ordering compares the concatenation `u‖v` entrywise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SequencePair {
    u: Sequence,
    v: Sequence,
}

/// Outcome of the Legendre-pair check: either a pair, or the first violated
/// condition as a concrete witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpVerdict {
    LegendrePair,
    SumMismatch { u_sum: i64, v_sum: i64 },
    PafViolation { lag: usize, value: i64 },
}

/// FFT-backed autocorrelation spectrum plus its exactness diagnostics.
#[derive(Debug, Clone)]
pub struct FastSpectrum {
    pub values: Vec<i64>,
    /// Largest |coefficient − nearest integer| seen before rounding.
    pub max_deviation: f64,
    /// True when the deviation guard tripped and the exact sum was used.
    pub fell_back: bool,
}

impl Sequence {
    pub fn new(m: Modulus, entries: Vec<i64>) -> Result<Sequence, Error> {
        if entries.len() != m.ell() {
            return Err(Error::LengthMismatch {
                left: m.ell(),
                right: entries.len(),
            });
        }
        Ok(Sequence { m, entries })
    }

    /// Build from entries alone; the modulus is the length.
    pub fn from_entries(entries: Vec<i64>) -> Result<Sequence, Error> {
        let m = Modulus::new(entries.len())?;
        Ok(Sequence { m, entries })
    }

    pub fn constant(m: Modulus, value: i64) -> Sequence {
        Sequence {
            entries: vec![value; m.ell()],
            m,
        }
    }

    pub fn modulus(&self) -> Modulus {
        self.m
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn get(&self, index: Residue) -> i64 {
        self.entries[index.value()]
    }

    /// True when every entry is +1 or −1.
    pub fn is_sign_sequence(&self) -> bool {
        self.entries.iter().all(|&e| e == 1 || e == -1)
    }

    fn require_signs(&self) -> Result<(), Error> {
        match self.entries.iter().position(|&e| e != 1 && e != -1) {
            None => Ok(()),
            Some(index) => Err(Error::NotASign {
                index,
                value: self.entries[index],
            }),
        }
    }

    /// `Σ_i v_i`.
    pub fn column_sum(&self) -> i64 {
        self.entries.iter().sum()
    }

    /// `PAF(v, j) = Σ_i v_i · v_{i−j}`, exact.
    pub fn paf(&self, lag: Residue) -> i64 {
        let ell = self.len();
        let j = lag.value();
        (0..ell)
            .map(|i| self.entries[i] * self.entries[(i + ell - j) % ell])
            .sum()
    }

    /// All `ℓ` autocorrelation values by direct summation.
    pub fn paf_spectrum(&self) -> Vec<i64> {
        (0..self.len())
            .map(|j| self.paf(self.m.residue(j as i64)))
            .collect()
    }

    /// All `ℓ` autocorrelation values through the FFT power spectrum.
    ///
    /// Coefficients are rounded to the nearest integer; if any coefficient
    /// sits more than `1e−6·ℓ` away from an integer the whole result is
    /// recomputed by direct summation and `fell_back` is set.  Either way the
    /// returned values are exact.
    pub fn paf_spectrum_fast(&self) -> FastSpectrum {
        let ell = self.len();
        let mut planner = FftPlanner::<f64>::new();
        let forward = planner.plan_fft_forward(ell);
        let inverse = planner.plan_fft_inverse(ell);

        let mut buf: Vec<Complex<f64>> = self
            .entries
            .iter()
            .map(|&e| Complex::new(e as f64, 0.0))
            .collect();
        forward.process(&mut buf);
        for x in buf.iter_mut() {
            *x = Complex::new(x.norm_sqr(), 0.0);
        }
        inverse.process(&mut buf);

        // rustfft's inverse is unnormalized: divide by ℓ.
        let scale = 1.0 / ell as f64;
        let mut values = Vec::with_capacity(ell);
        let mut max_deviation: f64 = 0.0;
        for x in &buf {
            let coeff = x.re * scale;
            let rounded = coeff.round();
            max_deviation = max_deviation.max((coeff - rounded).abs());
            values.push(rounded as i64);
        }

        if max_deviation >= 1e-6 * ell as f64 {
            return FastSpectrum {
                values: self.paf_spectrum(),
                max_deviation,
                fell_back: true,
            };
        }
        FastSpectrum {
            values,
            max_deviation,
            fell_back: false,
        }
    }

    /// Cyclic shift by `a`: output entry `i` is input entry `i − a`.
    pub fn cyclic_shift(&self, a: Residue) -> Sequence {
        let ell = self.len();
        let shift = a.value();
        let entries = (0..ell)
            .map(|i| self.entries[(i + ell - shift) % ell])
            .collect();
        Sequence { m: self.m, entries }
    }

    /// Decimation by the unit `k`: output entry `i` is input entry `i·k⁻¹`.
    pub fn decimate(&self, k: Unit) -> Sequence {
        let ell = self.len();
        let kinv = self.m.unit_inverse(k).value();
        let entries = (0..ell).map(|i| self.entries[(i * kinv) % ell]).collect();
        Sequence { m: self.m, entries }
    }

    /// Pack a ±1 sequence into a bitmask, bit `i` set ⇔ entry `i` is +1.
    /// Returns `None` for non-±1 entries or lengths above 64.
    pub fn pack_bits(&self) -> Option<u64> {
        if self.len() > 64 || !self.is_sign_sequence() {
            return None;
        }
        let mut bits = 0u64;
        for (i, &e) in self.entries.iter().enumerate() {
            if e == 1 {
                bits |= 1 << i;
            }
        }
        Some(bits)
    }

    /// Inverse of [`Sequence::pack_bits`].
    pub fn from_bits(m: Modulus, bits: u64) -> Sequence {
        let entries = (0..m.ell())
            .map(|i| if bits >> i & 1 == 1 { 1 } else { -1 })
            .collect();
        Sequence { m, entries }
    }

    /// Parse the sign form: one of `+`/`-` per entry, index 0 leftmost.
    pub fn parse_signs(text: &str) -> Result<Sequence, Error> {
        let mut entries = Vec::with_capacity(text.len());
        for (i, c) in text.chars().enumerate() {
            match c {
                '+' => entries.push(1),
                '-' => entries.push(-1),
                other => {
                    return Err(Error::Parse(format!(
                        "unexpected character {other:?} at position {i}; expected '+' or '-'"
                    )))
                }
            }
        }
        if entries.is_empty() {
            return Err(Error::Parse("empty sequence".into()));
        }
        Sequence::from_entries(entries)
    }

    /// Parse the comma-separated integer form.
    pub fn parse_csv(text: &str) -> Result<Sequence, Error> {
        let entries = text
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("bad integer {:?}: {e}", part.trim())))
            })
            .collect::<Result<Vec<i64>, Error>>()?;
        if entries.is_empty() {
            return Err(Error::Parse("empty sequence".into()));
        }
        Sequence::from_entries(entries)
    }

    /// Parse either text form: signs if the string looks like one, else CSV.
    pub fn parse_text(text: &str) -> Result<Sequence, Error> {
        if !text.is_empty() && text.chars().all(|c| c == '+' || c == '-') {
            Sequence::parse_signs(text)
        } else {
            Sequence::parse_csv(text)
        }
    }

    /// Render as the sign form; errors when an entry is not ±1.
    pub fn sign_string(&self) -> Result<String, Error> {
        self.require_signs()?;
        Ok(self
            .entries
            .iter()
            .map(|&e| if e == 1 { '+' } else { '-' })
            .collect())
    }

    pub fn csv_string(&self) -> String {
        self.entries
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl SequencePair {
    pub fn new(u: Sequence, v: Sequence) -> Result<SequencePair, Error> {
        if u.len() != v.len() {
            return Err(Error::LengthMismatch {
                left: u.len(),
                right: v.len(),
            });
        }
        Ok(SequencePair { u, v })
    }

    pub fn u(&self) -> &Sequence {
        &self.u
    }

    pub fn v(&self) -> &Sequence {
        &self.v
    }

    pub fn modulus(&self) -> Modulus {
        self.u.m
    }

    /// The switch `s(u, v) = (v, u)`.
    pub fn swapped(&self) -> SequencePair {
        SequencePair {
            u: self.v.clone(),
            v: self.u.clone(),
        }
    }

    pub fn is_sign_pair(&self) -> bool {
        self.u.is_sign_sequence() && self.v.is_sign_sequence()
    }

    pub(crate) fn require_signs(&self) -> Result<(), Error> {
        self.u.require_signs()?;
        self.v.require_signs()
    }

    /// The 2ℓ entries `u‖v`.
    pub fn concat_entries(&self) -> Vec<i64> {
        let mut all = Vec::with_capacity(2 * self.u.len());
        all.extend_from_slice(self.u.entries());
        all.extend_from_slice(self.v.entries());
        all
    }

    pub fn from_concat(m: Modulus, entries: &[i64]) -> Result<SequencePair, Error> {
        if entries.len() != 2 * m.ell() {
            return Err(Error::LengthMismatch {
                left: 2 * m.ell(),
                right: entries.len(),
            });
        }
        let (a, b) = entries.split_at(m.ell());
        SequencePair::new(Sequence::new(m, a.to_vec())?, Sequence::new(m, b.to_vec())?)
    }

    /// Parse the `u:v` text form (sign strings either side of one colon).
    pub fn parse(text: &str) -> Result<SequencePair, Error> {
        let (left, right) = text
            .split_once(':')
            .ok_or_else(|| Error::Parse("expected \"u:v\"".into()))?;
        let u = Sequence::parse_signs(left)?;
        let v = Sequence::parse_signs(right)?;
        SequencePair::new(u, v)
    }
}

impl fmt::Display for SequencePair {
    /// The `u:v` text form. Falls back to CSV halves for non-±1 entries.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.u.sign_string(), self.v.sign_string()) {
            (Ok(a), Ok(b)) => write!(f, "{a}:{b}"),
            _ => write!(f, "{}:{}", self.u.csv_string(), self.v.csv_string()),
        }
    }
}

impl fmt::Display for LpVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LpVerdict::LegendrePair => write!(f, "LP"),
            LpVerdict::SumMismatch { u_sum, v_sum } => {
                write!(f, "column sums differ ({u_sum} vs {v_sum})")
            }
            LpVerdict::PafViolation { lag, value } => {
                write!(f, "PAF sum at lag {lag} is {value}, expected -2")
            }
        }
    }
}

/// Check the Legendre-pair conditions, reporting the first violation.
///
/// Requires ±1 entries on both sides (error otherwise).  Conditions are
/// checked in order: equal column sums first, then the lag constraints for
/// `j = 1, …, ℓ−1`.
pub fn check_legendre_pair(pair: &SequencePair) -> Result<LpVerdict, Error> {
    pair.require_signs()?;
    let u_sum = pair.u().column_sum();
    let v_sum = pair.v().column_sum();
    if u_sum != v_sum {
        return Ok(LpVerdict::SumMismatch { u_sum, v_sum });
    }
    let m = pair.modulus();
    for j in 1..m.ell() {
        let lag = m.residue(j as i64);
        let value = pair.u().paf(lag) + pair.v().paf(lag);
        if value != -2 {
            return Ok(LpVerdict::PafViolation { lag: j, value });
        }
    }
    Ok(LpVerdict::LegendrePair)
}

/// Convenience wrapper: true iff `pair` is a Legendre pair.
pub fn is_legendre_pair(pair: &SequencePair) -> Result<bool, Error> {
    Ok(check_legendre_pair(pair)? == LpVerdict::LegendrePair)
}
