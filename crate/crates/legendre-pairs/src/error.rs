use thiserror::Error;

/// Errors surfaced by the library.
///
/// Everything that can go wrong here is a precondition violation (bad
/// modulus, non-unit decimation index, mismatched lengths) or a parse
/// failure; the algebra itself is total once inputs are validated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 1")]
    ZeroModulus,

    #[error("{value} is not a unit modulo {ell}")]
    NotAUnit { value: usize, ell: usize },

    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: usize, right: usize },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("entry {value} at index {index} is not +1 or -1")]
    NotASign { index: usize, value: i64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("length {ell} exceeds the verifier cap of {cap}")]
    VerifierCap { ell: usize, cap: usize },

    #[error("length {ell} exceeds the packed search limit of {limit}")]
    SearchLimit { ell: usize, limit: usize },
}
