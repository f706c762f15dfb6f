//! Primality, the Legendre symbol, and small number-theoretic helpers.
//!
//! Everything downstream works with odd primes p > 3; the [`OddPrime`]
//! newtype enforces that at construction so the field and matrix layers
//! never have to re-check it.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::{Error, Integer, Result};

/// An odd prime greater than 3, the standing hypothesis of every check.
///
/// Sweep bounds are desk-scale, so the value is kept in a `u64`; matrix
/// entries and determinants still use arbitrary precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OddPrime(u64);

impl OddPrime {
    /// Validates that `p` is prime and greater than 3.
    pub fn new(p: u64) -> Result<Self> {
        if p > 3 && is_prime(p) {
            Ok(OddPrime(p))
        } else {
            Err(Error::NotAnOddPrime(p))
        }
    }

    /// The prime as a machine integer.
    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// The prime as a big integer.
    #[inline]
    pub fn to_bigint(self) -> Integer {
        Integer::from(self.0)
    }

    /// `(p - 1) / 2`, the dimension of the half-size symbol matrices.
    #[inline]
    pub fn half(self) -> usize {
        ((self.0 - 1) / 2) as usize
    }

    /// `p mod 4`, either 1 or 3.
    #[inline]
    pub fn mod4(self) -> u64 {
        self.0 % 4
    }
}

impl std::fmt::Display for OddPrime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Deterministic Miller-Rabin primality test, exact for all `u64` inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // This base set is deterministic for all n < 3.3 * 10^24.
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// The Legendre symbol (a/p): 0 if p | a, +1 if a is a nonzero quadratic
/// residue mod p, -1 otherwise.
pub fn legendre(a: &Integer, p: OddPrime) -> i64 {
    let p_big = p.to_bigint();
    let mut r = a.mod_floor(&p_big);
    if r.is_negative() {
        r += &p_big;
    }
    legendre_u64(r.to_u64().expect("residue fits in u64"), p)
}

/// Legendre symbol for a residue already reduced into `[0, p)`.
///
/// Computed by the quadratic-reciprocity ladder; for an odd prime modulus
/// this agrees with Euler's criterion.
pub fn legendre_u64(mut a: u64, p: OddPrime) -> i64 {
    let mut m = p.get();
    a %= m;
    if a == 0 {
        return 0;
    }
    let mut sign = 1i64;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if m % 8 == 3 || m % 8 == 5 {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut m);
        if a % 4 == 3 && m % 4 == 3 {
            sign = -sign;
        }
        a %= m;
    }
    debug_assert_eq!(m, 1, "modulus was prime so the gcd must be 1");
    sign
}

/// Legendre symbol of a signed machine integer.
pub fn legendre_i64(a: i64, p: OddPrime) -> i64 {
    let m = p.get() as i64;
    let r = a.rem_euclid(m) as u64;
    legendre_u64(r, p)
}

/// All primes p with `lo <= p <= hi` in ascending order.
///
/// Primes 2 and 3 are outside the domain of every downstream check and are
/// never returned.
pub fn primes_in_range(lo: u64, hi: u64) -> Vec<OddPrime> {
    let mut out = Vec::new();
    let mut n = lo.max(5);
    if n % 2 == 0 {
        n += 1;
    }
    while n <= hi {
        if is_prime(n) {
            out.push(OddPrime(n));
        }
        n += 2;
    }
    out
}

/// Exact square-root test: `Some(r)` iff `n == r * r` with `r >= 0`.
pub fn exact_sqrt(n: &Integer) -> Option<Integer> {
    if n.is_negative() {
        return None;
    }
    if n.is_zero() {
        return Some(Integer::zero());
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}
