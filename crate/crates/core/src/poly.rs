//! Dense univariate polynomials over any exact scalar.
//!
//! The arithmetic is generic over `T: Num + Clone`, which covers the big
//! rationals used on the verification path as well as machine floats for
//! scratch work. Coefficients are stored low-degree first and kept trimmed,
//! so equality of values is equality of coefficient vectors.

use num_integer::Integer as _;
use num_traits::{Num, One, Signed, Zero};

use crate::{Error, Integer, Rational, Result};

/// Polynomial `coeffs[0] + coeffs[1] x + ... `, trailing zeros stripped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Num + Clone> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// `c * x^deg`.
    pub fn monomial(c: T, deg: usize) -> Self {
        let mut coeffs = vec![T::zero(); deg + 1];
        coeffs[deg] = c;
        Poly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        Poly::new(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Euclidean division by a nonzero divisor over a field scalar.
    ///
    /// Panics if `d` is zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        if self.coeffs.len() < d.coeffs.len() {
            return (Poly::zero(), self.clone());
        }
        let lead = d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![T::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i].clone() / lead.clone();
            if c.is_zero() {
                continue;
            }
            for j in 0..=dd {
                rem[i - dd + j] = rem[i - dd + j].clone() - c.clone() * d.coeffs[j].clone();
            }
            quo[i - dd] = c;
        }
        (Poly::new(quo), Poly::new(rem))
    }
}

/// The unique polynomial of degree `< points.len()` through the given
/// points, by Lagrange's interpolation formula.
pub fn lagrange_interpolate<T: Num + Clone>(points: &[(T, T)]) -> Result<Poly<T>> {
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if points[i].0 == points[j].0 {
                return Err(Error::DuplicateAbscissa);
            }
        }
    }
    let mut acc = Poly::zero();
    for (k, (xk, yk)) in points.iter().enumerate() {
        let mut num = Poly::one();
        let mut den = T::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if j == k {
                continue;
            }
            num = num.mul(&Poly::new(vec![T::zero() - xj.clone(), T::one()]));
            den = den * (xk.clone() - xj.clone());
        }
        acc = acc.add(&num.scale(&(yk.clone() / den)));
    }
    Ok(acc)
}

/// Rescales the row `(r, s)` so that `r` becomes a primitive integer
/// polynomial; both entries are multiplied by the same rational, preserving
/// any linear relation the row satisfies.
fn make_row_primitive(r: &mut Poly<Rational>, s: &mut Poly<Rational>) {
    if r.is_zero() {
        return;
    }
    let mut lcm = Integer::one();
    for c in r.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let mut gcd = Integer::zero();
    for c in r.coeffs() {
        gcd = gcd.gcd(&(c.numer() * (&lcm / c.denom())));
    }
    let factor = Rational::new(lcm, gcd);
    *r = r.scale(&factor);
    *s = s.scale(&factor);
}

/// Half extended gcd over the rationals: returns `(g, s)` with
/// `s * a = g (mod b)` and `g = gcd(a, b)` up to a nonzero constant.
///
/// Remainders are rescaled to primitive integer polynomials at every step,
/// which keeps coefficient growth near the subresultant bound instead of
/// the exponential blowup of the naive rational remainder sequence.
pub fn half_ext_gcd(a: &Poly<Rational>, b: &Poly<Rational>) -> (Poly<Rational>, Poly<Rational>) {
    let mut r0 = b.clone();
    let mut s0 = Poly::zero();
    let mut r1 = a.clone();
    let mut s1 = Poly::one();
    make_row_primitive(&mut r0, &mut s0);
    make_row_primitive(&mut r1, &mut s1);
    while !r1.is_zero() {
        let (q, rem) = r0.div_rem(&r1);
        let mut r2 = rem;
        let mut s2 = s0.sub(&q.mul(&s1));
        make_row_primitive(&mut r2, &mut s2);
        r0 = r1;
        s0 = s1;
        r1 = r2;
        s1 = s2;
    }
    (r0, s0)
}

/// Inverse of `a` modulo `m` over the rationals; `m` must be irreducible
/// over Q for the inverse to exist for every nonzero `a` of smaller degree.
pub fn inverse_mod(a: &Poly<Rational>, m: &Poly<Rational>) -> Result<Poly<Rational>> {
    if a.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (g, s) = half_ext_gcd(a, m);
    match g.degree() {
        Some(0) => {
            let c = g.coeff(0);
            Ok(s.scale(&(Rational::one() / c)))
        }
        _ => Err(Error::InternalConsistency(
            "polynomial gcd with an irreducible modulus was not a constant".into(),
        )),
    }
}

/// Renders a rational canonically: plain decimal when the denominator is
/// one, `num/den` otherwise.
pub fn render_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Renders an exact rational that is required to be an integer.
pub fn rational_is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

/// Signed helper: `(-1)^e` as an integer.
pub fn neg_one_pow(e: u64) -> Integer {
    if e % 2 == 0 {
        Integer::one()
    } else {
        -Integer::one()
    }
}

/// Rational from a signed machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(Integer::from(n))
}

/// Rational `n/d` in canonical form.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(Integer::from(n), Integer::from(d))
}

/// True iff the rational is strictly positive.
pub fn is_positive(q: &Rational) -> bool {
    q.numer().is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rp(coeffs: &[i64]) -> Poly<Rational> {
        Poly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = rp(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(rp(&[0, 0]).is_zero());
        assert_eq!(Poly::<Rational>::zero().degree(), None);
    }

    #[test]
    fn arithmetic_basics() {
        let a = rp(&[1, 1]); // 1 + x
        let b = rp(&[-1, 1]); // -1 + x
        assert_eq!(a.mul(&b), rp(&[-1, 0, 1]));
        assert_eq!(a.add(&b), rp(&[0, 2]));
        assert_eq!(a.sub(&a), Poly::zero());
        assert_eq!(a.eval(&rat(3)), rat(4));
    }

    #[test]
    fn div_rem_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let a = Poly::new((0..rng.gen_range(0..8)).map(|_| rat(rng.gen_range(-9..10))).collect::<Vec<_>>());
            let d = Poly::new(
                (0..rng.gen_range(1..5))
                    .map(|_| rat(rng.gen_range(-9..10)))
                    .chain(std::iter::once(rat(rng.gen_range(1..5))))
                    .collect::<Vec<_>>(),
            );
            let (q, r) = a.div_rem(&d);
            assert_eq!(q.mul(&d).add(&r), a);
            assert!(r.degree() < d.degree() || r.is_zero());
        }
    }

    #[test]
    fn lagrange_examples() {
        let p = lagrange_interpolate(&[(rat(0), rat(1)), (rat(1), rat(1))]).unwrap();
        assert_eq!(p, rp(&[1]));

        let p = lagrange_interpolate(&[(rat(0), rat(0)), (rat(1), rat(1)), (rat(2), rat(4))]).unwrap();
        assert_eq!(p, rp(&[0, 0, 1]));

        let p = lagrange_interpolate(&[(rat(0), rat(3)), (rat(2), rat(7))]).unwrap();
        assert_eq!(p, rp(&[3, 2]));
    }

    #[test]
    fn lagrange_rejects_duplicate_abscissae() {
        let err = lagrange_interpolate(&[(rat(1), rat(0)), (rat(1), rat(5))]).unwrap_err();
        assert_eq!(err, Error::DuplicateAbscissa);
    }

    #[test]
    fn lagrange_recovers_random_quintics() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..100 {
            let poly = Poly::new((0..=5).map(|_| ratio(rng.gen_range(-20..21), rng.gen_range(1..7))).collect::<Vec<_>>());
            let points: Vec<(Rational, Rational)> =
                (0..6).map(|x| (rat(x - 2), poly.eval(&rat(x - 2)))).collect();
            assert_eq!(lagrange_interpolate(&points).unwrap(), poly);
        }
    }

    #[test]
    fn half_ext_gcd_bezout_relation() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let a = Poly::new((0..rng.gen_range(1..6)).map(|_| rat(rng.gen_range(-9..10))).collect::<Vec<_>>());
            let b = Poly::new(
                (0..rng.gen_range(1..6))
                    .map(|_| rat(rng.gen_range(-9..10)))
                    .chain(std::iter::once(rat(1)))
                    .collect::<Vec<_>>(),
            );
            if a.is_zero() {
                continue;
            }
            let (g, s) = half_ext_gcd(&a, &b);
            // s*a - g must be a multiple of b.
            let (_, rem) = s.mul(&a).sub(&g).div_rem(&b);
            assert!(rem.is_zero(), "bezout relation failed");
            // the gcd divides both inputs
            assert!(a.div_rem(&g).1.is_zero());
            assert!(b.div_rem(&g).1.is_zero());
        }
    }

    #[test]
    fn inverse_mod_irreducible() {
        // x^2 + 1 is irreducible over Q.
        let m = rp(&[1, 0, 1]);
        let a = rp(&[3, 2]); // 3 + 2x
        let inv = inverse_mod(&a, &m).unwrap();
        let (_, rem) = a.mul(&inv).div_rem(&m);
        assert_eq!(rem, Poly::one());
        assert!(inverse_mod(&Poly::zero(), &m).is_err());
    }

    #[test]
    fn render_rational_canonical() {
        assert_eq!(render_rational(&rat(5)), "5");
        assert_eq!(render_rational(&ratio(-1, 2)), "-1/2");
        assert_eq!(render_rational(&ratio(4, 2)), "2");
    }
}
