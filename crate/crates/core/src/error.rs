use thiserror::Error;

/// Errors surfaced by the exact-arithmetic layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The modulus handed to a constructor is not an odd prime greater than 3.
    #[error("{0} is not a prime greater than 3")]
    NotAnOddPrime(u64),

    /// A Galois map was requested for an exponent not coprime to p.
    #[error("Galois exponent {t} is not invertible mod {p}")]
    BadGaloisExponent { p: u64, t: u64 },

    /// Division by zero in a field (zero cyclotomic element or zero-norm
    /// quadratic element).
    #[error("division by zero")]
    DivisionByZero,

    /// An element expected to lie in the real quadratic subfield does not.
    #[error("element is not of the form u + v*sqrt(p)")]
    NotInQuadraticField,

    /// Lagrange interpolation received two points with the same abscissa.
    #[error("duplicate abscissa in interpolation data")]
    DuplicateAbscissa,

    /// An internal cross-check failed; indicates a bug, not bad input.
    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),
}
