//! Exact arithmetic in the p-th cyclotomic field.
//!
//! Elements are rational coefficient vectors over the power basis
//! `1, z, ..., z^(p-2)` where z is a primitive p-th root of unity, reduced
//! eagerly by `z^(p-1) = -(1 + z + ... + z^(p-2))`. The representation is
//! canonical, so equality is plain vector comparison and the complex
//! embedding is never evaluated.
//!
//! The square root of p lives inside this field as the quadratic Gauss sum:
//! `tau_p^2 = p` when p = 1 (mod 4) and `tau_p^2 = -p` when p = 3 (mod 4),
//! so closed forms stated with `sqrt(p)` or `i*sqrt(p)` become exact
//! identities with `sqrt(p)` (resp. `i*sqrt(p)`) replaced by `tau_p`.

use num_traits::{One, Signed, Zero};

use crate::arith::{legendre_u64, OddPrime};
use crate::poly::{self, Poly};
use crate::{Error, Rational, Result};

/// An element of the p-th cyclotomic field in the canonical power basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycElem {
    p: OddPrime,
    coeffs: Vec<Rational>,
}

impl CycElem {
    pub fn zero(p: OddPrime) -> Self {
        CycElem {
            p,
            coeffs: vec![Rational::zero(); p.get() as usize - 1],
        }
    }

    pub fn one(p: OddPrime) -> Self {
        CycElem::from_rational(p, Rational::one())
    }

    pub fn from_rational(p: OddPrime, q: Rational) -> Self {
        let mut e = CycElem::zero(p);
        e.coeffs[0] = q;
        e
    }

    /// Folds a length-p accumulator indexed by exponent mod p down to the
    /// canonical basis using `z^(p-1) = -(1 + z + ... + z^(p-2))`.
    fn from_acc(p: OddPrime, mut acc: Vec<Rational>) -> Self {
        debug_assert_eq!(acc.len(), p.get() as usize);
        let top = acc.pop().expect("accumulator is non-empty");
        if !top.is_zero() {
            for c in acc.iter_mut() {
                *c = &*c - &top;
            }
        }
        CycElem { p, coeffs: acc }
    }

    /// Reduces an arbitrary-degree polynomial in z using `z^p = 1` first,
    /// then the cyclotomic relation.
    fn from_poly(p: OddPrime, poly: &Poly<Rational>) -> Self {
        let m = p.get() as usize;
        let mut acc = vec![Rational::zero(); m];
        for (e, c) in poly.coeffs().iter().enumerate() {
            if !c.is_zero() {
                let idx = e % m;
                acc[idx] = &acc[idx] + c;
            }
        }
        CycElem::from_acc(p, acc)
    }

    pub fn prime(&self) -> OddPrime {
        self.p
    }

    /// Coefficients over `1, z, ..., z^(p-2)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn assert_same_prime(&self, other: &Self) {
        assert_eq!(
            self.p, other.p,
            "cyclotomic elements live in different fields"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_prime(other);
        CycElem {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_prime(other);
        CycElem {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        CycElem {
            p: self.p,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        CycElem {
            p: self.p,
            coeffs: self.coeffs.iter().map(|a| a * q).collect(),
        }
    }

    /// Multiplication by `z^e`, a cheap index rotation.
    pub fn mul_zeta(&self, e: u64) -> Self {
        let m = self.p.get() as usize;
        let e = (e % m as u64) as usize;
        let mut acc = vec![Rational::zero(); m];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc[(i + e) % m] = c.clone();
            }
        }
        CycElem::from_acc(self.p, acc)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_prime(other);
        let m = self.p.get() as usize;
        // iterate the sparser operand on the outside
        let (outer, inner) = if self.nonzero_count() <= other.nonzero_count() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = vec![Rational::zero(); m];
        for (i, a) in outer.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in inner.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let idx = (i + j) % m;
                acc[idx] = &acc[idx] + &(a * b);
            }
        }
        CycElem::from_acc(self.p, acc)
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    fn nonzero_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Field inverse via extended gcd with the cyclotomic polynomial.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let a = Poly::new(self.coeffs.clone());
        let modulus = cyclotomic_poly(self.p);
        let inv = poly::inverse_mod(&a, &modulus)?;
        Ok(CycElem::from_poly(self.p, &inv))
    }

    /// `Some(q)` iff the element is the rational constant q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Writes the element as `u + v * tau_p` with rational u, v, failing if
    /// it does not lie in the quadratic subfield fixed by the
    /// quadratic-residue Galois maps.
    pub fn extract_sqrt_coords(&self) -> Result<(Rational, Rational)> {
        let p = self.p;
        let g = smallest_non_residue(p);
        let image = GaloisMap::new(p, g)?.apply(self);
        let half = poly::ratio(1, 2);
        let sym = self.add(&image).scale(&half);
        let skew = self.sub(&image).scale(&half);
        let u = sym.as_rational().ok_or(Error::NotInQuadraticField)?;
        let tau = gauss_sum(p);
        let r = skew
            .mul(&tau)
            .as_rational()
            .ok_or(Error::NotInQuadraticField)?;
        let v = r / tau_squared(p);
        // the decomposition must reproduce the element exactly
        let rebuilt = CycElem::from_rational(p, u.clone()).add(&tau.scale(&v));
        if &rebuilt == self {
            Ok((u, v))
        } else {
            Err(Error::NotInQuadraticField)
        }
    }
}

impl std::fmt::Display for CycElem {
    /// Canonical sparse rendering: `0`, or `[e:c ...]` with ascending
    /// exponents and canonical rationals.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "[")?;
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}:{}", e, poly::render_rational(c))?;
            first = false;
        }
        write!(f, "]")
    }
}

/// The ring automorphism `z -> z^t` for t invertible mod p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GaloisMap {
    p: OddPrime,
    t: u64,
}

impl GaloisMap {
    pub fn new(p: OddPrime, t: u64) -> Result<Self> {
        let t = t % p.get();
        if t == 0 {
            return Err(Error::BadGaloisExponent { p: p.get(), t });
        }
        Ok(GaloisMap { p, t })
    }

    pub fn exponent(&self) -> u64 {
        self.t
    }

    pub fn apply(&self, a: &CycElem) -> CycElem {
        assert_eq!(self.p, a.p, "Galois map applied in the wrong field");
        let m = self.p.get() as usize;
        let t = self.t as usize;
        let mut acc = vec![Rational::zero(); m];
        for (i, c) in a.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let idx = (i * t) % m;
                acc[idx] = &acc[idx] + c;
            }
        }
        CycElem::from_acc(self.p, acc)
    }
}

/// `z^e` in canonical form; the exponent is reduced mod p.
pub fn zeta_pow(p: OddPrime, e: i64) -> CycElem {
    let m = p.get() as usize;
    let e = e.rem_euclid(p.get() as i64) as usize;
    let mut acc = vec![Rational::zero(); m];
    acc[e] = Rational::one();
    CycElem::from_acc(p, acc)
}

/// The cyclotomic polynomial `1 + x + ... + x^(p-1)`.
fn cyclotomic_poly(p: OddPrime) -> Poly<Rational> {
    Poly::new(vec![Rational::one(); p.get() as usize])
}

/// The quadratic Gauss sum `tau_p = sum_k (k/p) z^k`.
pub fn gauss_sum(p: OddPrime) -> CycElem {
    let m = p.get() as usize;
    let mut acc = vec![Rational::zero(); m];
    for k in 1..p.get() {
        acc[k as usize] = poly::rat(legendre_u64(k, p));
    }
    CycElem::from_acc(p, acc)
}

/// `tau_p^2 = (-1)^((p-1)/2) * p` as a rational.
pub fn tau_squared(p: OddPrime) -> Rational {
    if p.mod4() == 1 {
        poly::rat(p.get() as i64)
    } else {
        poly::rat(-(p.get() as i64))
    }
}

/// The smallest quadratic non-residue of p.
pub fn smallest_non_residue(p: OddPrime) -> u64 {
    (2..p.get())
        .find(|&g| legendre_u64(g, p) == -1)
        .expect("every odd prime has a non-residue")
}

/// `prod_{k=1..(p-1)/2} (1 - z^(k^2))`, the product over the quadratic
/// residue roots of unity.
pub fn prod_one_minus_qr(p: OddPrime) -> CycElem {
    let pv = p.get();
    let mut acc = CycElem::one(p);
    for k in 1..=pv / 2 {
        let e = (k * k) % pv;
        acc = acc.sub(&acc.mul_zeta(e));
    }
    acc
}

/// `prod_{1<=j<k<=(p-1)/2} (z^(j^2) - z^(k^2))^2`, the squared Vandermonde
/// product over the quadratic residue roots of unity.
pub fn prod_vandermonde_qr_sq(p: OddPrime) -> CycElem {
    let pv = p.get();
    let squares: Vec<u64> = (1..=pv / 2).map(|k| (k * k) % pv).collect();
    let mut acc = CycElem::one(p);
    for j in 0..squares.len() {
        for k in j + 1..squares.len() {
            acc = acc.mul_zeta(squares[j]).sub(&acc.mul_zeta(squares[k]));
        }
    }
    acc.square()
}

/// The interpolation sum
/// `sum_k z^(-shift*k^2) * prod_{j != k} ((1 - z^(j^2)) / (z^(k^2) - z^(j^2)))^2`
/// for shift 2 or 3, evaluated with exact field inversion.
pub fn interp_sum(p: OddPrime, shift: u64) -> Result<CycElem> {
    assert!(shift == 2 || shift == 3, "only shifts 2 and 3 are defined");
    let pv = p.get();
    let squares: Vec<u64> = (1..=pv / 2).map(|k| (k * k) % pv).collect();
    let mut total = CycElem::zero(p);
    for (k, &ak) in squares.iter().enumerate() {
        let mut numer = CycElem::one(p);
        let mut denom = CycElem::one(p);
        for (j, &aj) in squares.iter().enumerate() {
            if j == k {
                continue;
            }
            numer = numer.sub(&numer.mul_zeta(aj));
            denom = denom.mul_zeta(ak).sub(&denom.mul_zeta(aj));
        }
        let ratio = numer.mul(&denom.inv()?);
        let twist = (pv - (shift * ak) % pv) % pv;
        total = total.add(&ratio.square().mul_zeta(twist));
    }
    Ok(total)
}
