//! Exact arithmetic over `Z_ℓ` and its unit group `Z_ℓ^×`.
//!
//! Residues are always stored as their least nonnegative representative, so
//! equality of group elements downstream is plain value comparison.  `ℓ = 1`
//! and `ℓ = 2` are legal; the degenerate collapse `−1 ≡ 1` there is handled
//! by the callers that care (deduplication in the group layer), not rejected
//! here.

use crate::Error;

/// The sequence length `ℓ`, i.e. the modulus every index lives under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus {
    ell: usize,
}

/// An element of `Z_ℓ`, stored canonically in `[0, ℓ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue {
    value: usize,
}

/// An element of `Z_ℓ^×`: a residue coprime to `ℓ`, stored canonically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Unit {
    value: usize,
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Modulus {
    pub fn new(ell: usize) -> Result<Modulus, Error> {
        if ell == 0 {
            return Err(Error::ZeroModulus);
        }
        Ok(Modulus { ell })
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Odd and ≥ 3: the only lengths at which Legendre pairs exist (with the
    /// vacuous exception of ℓ = 1).  Recorded here, enforced by the search.
    pub fn is_lp_length(&self) -> bool {
        self.ell >= 3 && self.ell % 2 == 1
    }

    /// Reduce an arbitrary integer to its canonical residue.
    pub fn residue(&self, x: i64) -> Residue {
        Residue {
            value: x.rem_euclid(self.ell as i64) as usize,
        }
    }

    /// Validate `x` as a unit. Rejects values not coprime to `ℓ`.
    pub fn unit(&self, x: i64) -> Result<Unit, Error> {
        let value = x.rem_euclid(self.ell as i64) as usize;
        // gcd(0, 1) = 1, so 0 is the (sole) unit mod 1.
        if gcd(value, self.ell) == 1 {
            Ok(Unit { value })
        } else {
            Err(Error::NotAUnit {
                value,
                ell: self.ell,
            })
        }
    }

    /// All units of `Z_ℓ` in increasing canonical order; `[0]` for ℓ = 1.
    pub fn units(&self) -> Vec<Unit> {
        (0..self.ell)
            .filter(|&v| gcd(v, self.ell) == 1)
            .map(|value| Unit { value })
            .collect()
    }

    /// Euler's phi: the order of `Z_ℓ^×`, by gcd scan.
    pub fn phi(&self) -> usize {
        (0..self.ell).filter(|&v| gcd(v, self.ell) == 1).count()
    }

    /// The multiplicative inverse of a unit, by scan. `ℓ` is desk-scale
    /// everywhere in this crate, so a scan beats carrying an extended-gcd
    /// path that would still need the canonical reduction.
    pub fn unit_inverse(&self, b: Unit) -> Unit {
        let target = 1 % self.ell;
        for x in 0..self.ell {
            if gcd(x, self.ell) == 1 && (b.value * x) % self.ell == target {
                return Unit { value: x };
            }
        }
        unreachable!("every unit has an inverse");
    }

    pub fn add(&self, a: Residue, b: Residue) -> Residue {
        Residue {
            value: (a.value + b.value) % self.ell,
        }
    }

    pub fn sub(&self, a: Residue, b: Residue) -> Residue {
        Residue {
            value: (a.value + self.ell - b.value) % self.ell,
        }
    }

    pub fn neg(&self, a: Residue) -> Residue {
        Residue {
            value: (self.ell - a.value) % self.ell,
        }
    }

    pub fn mul(&self, a: Residue, b: Residue) -> Residue {
        Residue {
            value: (a.value * b.value) % self.ell,
        }
    }

    pub fn mul_unit(&self, a: Unit, b: Unit) -> Unit {
        Unit {
            value: (a.value * b.value) % self.ell,
        }
    }

    /// `−k`, which is again a unit since gcd(ℓ−k, ℓ) = gcd(k, ℓ).
    pub fn neg_unit(&self, k: Unit) -> Unit {
        Unit {
            value: (self.ell - k.value) % self.ell,
        }
    }

    pub fn zero(&self) -> Residue {
        Residue { value: 0 }
    }

    pub fn one_unit(&self) -> Unit {
        Unit {
            value: 1 % self.ell,
        }
    }
}

impl Residue {
    pub fn value(&self) -> usize {
        self.value
    }
}

impl Unit {
    pub fn value(&self) -> usize {
        self.value
    }

    pub fn as_residue(&self) -> Residue {
        Residue { value: self.value }
    }
}
