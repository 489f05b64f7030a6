//! Exact machinery for Legendre pairs and their symmetries.
//!
//! A Legendre pair of length `ℓ` is a pair of ±1 vectors `(u, v)` indexed by
//! `Z_ℓ` with equal column sums whose periodic autocorrelations sum to −2 at
//! every nonzero lag.  The operations that send Legendre pairs to Legendre
//! pairs — cyclic shifts, decimations, sign-flipped decimation of the second
//! coordinate, and swapping the two coordinates — generate a finite group
//! acting on pairs.  This crate implements:
//!
//! * exact residue/unit arithmetic over `Z_ℓ` ([`modring`]),
//! * sequences, periodic autocorrelation, shifts, decimations, and the
//!   Legendre-pair predicate ([`seqops`]),
//! * the symmetry group in normal form, with exact composition, inversion,
//!   enumeration, and a faithful permutation representation ([`group`]),
//! * orbits, canonical representatives, and the equivalence test ([`orbits`]),
//! * exhaustive, symmetry-aware search and classification ([`search`]),
//! * executable finite-instance verification of the group's structural
//!   claims ([`verifier`]),
//! * a thin command-line front end ([`cli`]).
//!
//! All arithmetic is exact integer arithmetic; the only floating point in the
//! crate is the optional FFT fast path for autocorrelation spectra, which is
//! rounded back to integers and cross-checked against the exact sum.
//!
//! ```
//! use legendre_pairs::{Modulus, SequencePair, seqops};
//!
//! let pair = SequencePair::parse("-++-+--:-++-+--").unwrap();
//! assert!(seqops::is_legendre_pair(&pair).unwrap());
//! ```

pub mod cli;
mod error;
pub mod group;
pub mod modring;
pub mod orbits;
pub mod search;
pub mod seqops;
pub mod verifier;

pub use error::Error;
pub use group::{DElement, GgElement, PairPermutation};
pub use modring::{Modulus, Residue, Unit};
pub use orbits::OrbitReport;
pub use search::{ClassificationReport, SearchConfig, SearchMode};
pub use seqops::{LpVerdict, Sequence, SequencePair};
pub use verifier::{ClaimId, TheoremCertificate};

/// Default seed for the randomized portions of the verifier and test suites.
pub const DEFAULT_SEED: u64 = 42;
