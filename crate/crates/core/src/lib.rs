//! Exact arithmetic for Legendre-symbol matrix determinants.
//!
//! This crate evaluates determinants of matrices built from Legendre symbols
//! and independently computes the quadratic-field invariants (fundamental
//! units, class numbers, Gauss sums, cyclotomic products) that appear in
//! their closed-form evaluations. Everything on the verification path is
//! exact: big integers, big rationals, and canonical power-basis arithmetic
//! in the cyclotomic field; no floating point anywhere.
//!
//! Module map:
//!
//! * [`arith`] — primes, Legendre symbol, big integer/rational aliases.
//! * [`poly`] — dense polynomials generic over a num-traits scalar,
//!   Lagrange interpolation, extended gcd over the rationals.
//! * [`matrix`] — dense matrices generic over a num-traits scalar,
//!   fraction-free (Bareiss) determinants, adjugates, and the
//!   Legendre-symbol matrix builders.
//! * [`cyclotomic`] — exact arithmetic in the p-th cyclotomic field,
//!   Gauss sums, Galois action, root-of-unity products.
//! * [`quadratic`] — arithmetic in real quadratic fields, fundamental
//!   units, class numbers.
//! * [`verify`] — the check harness pitting computed determinants against
//!   closed forms, plus the conjecture-exploration mode.

pub mod arith;
pub mod cyclotomic;
mod error;
pub mod matrix;
pub mod poly;
pub mod quadratic;
pub mod verify;

pub use error::Error;

/// Arbitrary-precision signed integer used throughout the crate.
pub type Integer = num_bigint::BigInt;

/// Arbitrary-precision rational; always held in canonical reduced form.
pub type Rational = num_rational::BigRational;

/// Dense square matrix of arbitrary-precision integers.
pub type IntMatrix = matrix::Matrix<Integer>;

/// Dense polynomial with arbitrary-precision rational coefficients.
pub type RatPoly = poly::Poly<Rational>;

/// Convenience result alias for fallible crate operations.
pub type Result<T> = std::result::Result<T, Error>;
