//! Dense square matrices and exact determinants.
//!
//! The determinant engine is single-step fraction-free elimination
//! (Bareiss): every intermediate entry is a minor of the input, so all
//! divisions are exact and coefficient growth stays within the Hadamard
//! bound. The code is generic over any signed exact scalar; the crate-root
//! alias [`crate::IntMatrix`] pins it to big integers for the symbol
//! matrices.

use num_traits::{Num, One, Signed, Zero};

use crate::arith::{legendre_i64, OddPrime};
use crate::{Error, IntMatrix, Integer, Result};

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    n: usize,
    entries: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.n + j]
    }
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Matrix { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        }
    }
}

impl<T: Num + Signed + Clone> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        Matrix::from_fn(self.n, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.n {
                acc = acc + self.get(i, k).clone() * other.get(k, j).clone();
            }
            acc
        })
    }

    /// Exact determinant by fraction-free single-step elimination.
    ///
    /// Rows are swapped only to clear a zero pivot, with the sign tracked
    /// explicitly; a fully zero pivot column short-circuits to zero.
    pub fn det_bareiss(&self) -> T {
        self.det_bareiss_observed(|_| {})
    }

    /// Same elimination, invoking `observe` on every updated entry so
    /// callers can instrument coefficient growth.
    pub fn det_bareiss_observed(&self, mut observe: impl FnMut(&T)) -> T {
        let n = self.n;
        if n == 0 {
            return T::one();
        }
        let mut m = self.entries.clone();
        let mut negated = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                match (k + 1..n).find(|&r| !m[r * n + k].is_zero()) {
                    Some(r) => {
                        for j in 0..n {
                            m.swap(k * n + j, r * n + j);
                        }
                        negated = !negated;
                    }
                    None => return T::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let val = (m[k * n + k].clone() * m[i * n + j].clone()
                        - m[i * n + k].clone() * m[k * n + j].clone())
                        / prev.clone();
                    observe(&val);
                    m[i * n + j] = val;
                }
                m[i * n + k] = T::zero();
            }
            prev = m[k * n + k].clone();
        }
        let det = m[n * n - 1].clone();
        if negated {
            -det
        } else {
            det
        }
    }

    /// Naive determinant by cofactor expansion along the first row.
    ///
    /// Exponential in the dimension; kept as the independent oracle the
    /// Bareiss engine is validated against on small matrices.
    pub fn det_cofactor(&self) -> T {
        let n = self.n;
        match n {
            0 => return T::one(),
            1 => return self.get(0, 0).clone(),
            _ => {}
        }
        let mut det = T::zero();
        for j in 0..n {
            if self.get(0, j).is_zero() {
                continue;
            }
            let minor = self.minor(0, j);
            let term = self.get(0, j).clone() * minor.det_cofactor();
            det = if j % 2 == 0 { det + term } else { det - term };
        }
        det
    }

    /// The matrix with row `i` and column `j` removed.
    pub fn minor(&self, i: usize, j: usize) -> Self {
        Matrix::from_fn(self.n - 1, |r, c| {
            let rr = if r < i { r } else { r + 1 };
            let cc = if c < j { c } else { c + 1 };
            self.get(rr, cc).clone()
        })
    }

    /// The adjugate (transposed cofactor matrix), satisfying
    /// `m * adj(m) = det(m) * I`.
    pub fn adjugate(&self) -> Self {
        let n = self.n;
        if n == 1 {
            return Matrix::identity(1);
        }
        Matrix::from_fn(n, |i, j| {
            // entry (i, j) of the adjugate is the (j, i) cofactor
            let c = self.minor(j, i).det_bareiss();
            if (i + j) % 2 == 0 {
                c
            } else {
                -c
            }
        })
    }
}

/// A determinant that is (at most) linear in the shift variable:
/// `c0 + c1 * x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinPoly {
    pub c0: Integer,
    pub c1: Integer,
}

impl LinPoly {
    pub fn new(c0: Integer, c1: Integer) -> Self {
        LinPoly { c0, c1 }
    }

    pub fn eval(&self, x: i64) -> Integer {
        &self.c0 + &self.c1 * Integer::from(x)
    }
}

impl std::fmt::Display for LinPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.c1.is_negative() {
            write!(f, "{}-{}x", self.c0, -&self.c1)
        } else {
            write!(f, "{}+{}x", self.c0, self.c1)
        }
    }
}

/// Which x-shifted symbol matrix a linear determinant refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymbolMatrix {
    /// First row `(j/p)`, later rows `((i+j)/p)`.
    Sum,
    /// First row `(j/p)`, later rows `((i-j)/p)`.
    Diff,
}

/// Chapman matrix dimension: `(p-1)/2` or `(p+1)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChapmanSize {
    Half,
    HalfPlusOne,
}

/// The `(p-1)/2 x (p-1)/2` matrix with entries `x + (j/p)` in the first
/// row and `x + ((i+j)/p)` below it (1-based indices). `p` never divides
/// `i + j` in this range, so no entry involves the symbol of zero.
pub fn sum_matrix(p: OddPrime, x: &Integer) -> IntMatrix {
    let n = p.half();
    Matrix::from_fn(n, |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        let s = if i == 1 {
            legendre_i64(j, p)
        } else {
            legendre_i64(i + j, p)
        };
        x + Integer::from(s)
    })
}

/// Companion of [`sum_matrix`] with `((i-j)/p)` below the first row; the
/// diagonal of those rows carries the symbol of zero.
pub fn diff_matrix(p: OddPrime, x: &Integer) -> IntMatrix {
    let n = p.half();
    Matrix::from_fn(n, |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        let s = if i == 1 {
            legendre_i64(j, p)
        } else {
            legendre_i64(i - j, p)
        };
        x + Integer::from(s)
    })
}

/// Chapman's matrix `[((i+j-1)/p)]` with 1-based indices, in either of the
/// two dimensions his evaluations cover.
pub fn chapman_matrix(p: OddPrime, size: ChapmanSize) -> IntMatrix {
    let n = match size {
        ChapmanSize::Half => p.half(),
        ChapmanSize::HalfPlusOne => p.half() + 1,
    };
    Matrix::from_fn(n, |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        Integer::from(legendre_i64(i + j - 1, p))
    })
}

/// `[((i+j)/p)]` over 0-based indices up to `(p-1)/2`, with the whole
/// first row replaced by ones.
pub fn sum_ones_matrix(p: OddPrime) -> IntMatrix {
    Matrix::from_fn(p.half() + 1, |i, j| {
        if i == 0 {
            Integer::one()
        } else {
            Integer::from(legendre_i64(i as i64 + j as i64, p))
        }
    })
}

/// `[((i-j)/p)]` over 0-based indices up to `(p-1)/2`, with the whole
/// first row replaced by ones.
pub fn diff_ones_matrix(p: OddPrime) -> IntMatrix {
    Matrix::from_fn(p.half() + 1, |i, j| {
        if i == 0 {
            Integer::one()
        } else {
            Integer::from(legendre_i64(i as i64 - j as i64, p))
        }
    })
}

/// Vsemirnov's matrix `[((i-j)/p)]` over 0-based indices up to `(p-1)/2`.
pub fn vsemirnov_matrix(p: OddPrime) -> IntMatrix {
    Matrix::from_fn(p.half() + 1, |i, j| {
        Integer::from(legendre_i64(i as i64 - j as i64, p))
    })
}

/// Exact linear-in-x determinant of the chosen symbol matrix.
///
/// The determinant of a rank-one perturbation `H + x*vv^T` is linear in x
/// (matrix-determinant lemma), so two evaluations pin it down; a third
/// evaluation at x = 2 cross-checks builder and engine.
pub fn det_linear(p: OddPrime, kind: SymbolMatrix) -> Result<LinPoly> {
    let build = |x: i64| match kind {
        SymbolMatrix::Sum => sum_matrix(p, &Integer::from(x)),
        SymbolMatrix::Diff => diff_matrix(p, &Integer::from(x)),
    };
    let d0 = build(0).det_bareiss();
    let d1 = build(1).det_bareiss();
    let c1 = &d1 - &d0;
    let lin = LinPoly::new(d0, c1);
    let d2 = build(2).det_bareiss();
    if d2 != lin.eval(2) {
        return Err(Error::InternalConsistency(format!(
            "det at x=2 for p={p} is {d2}, not on the line {lin}"
        )));
    }
    Ok(lin)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(v: u64) -> OddPrime {
        OddPrime::new(v).unwrap()
    }

    fn int_matrix(rows: &[&[i64]]) -> IntMatrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| Integer::from(v)).collect()).collect())
    }

    #[test]
    fn det_small_cases() {
        assert_eq!(IntMatrix::identity(4).det_bareiss(), Integer::from(1));
        assert_eq!(int_matrix(&[&[1, 2], &[3, 4]]).det_bareiss(), Integer::from(-2));
        assert_eq!(sum_matrix(p(5), &Integer::zero()).det_bareiss(), Integer::zero());
    }

    #[test]
    fn det_with_zero_pivots() {
        // forces a row swap in the first column
        let m = int_matrix(&[&[0, 1, 2], &[1, 0, 3], &[4, 5, 0]]);
        assert_eq!(m.det_bareiss(), m.det_cofactor());
        // genuinely singular
        let s = int_matrix(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(s.det_bareiss(), Integer::zero());
    }

    #[test]
    fn bareiss_matches_cofactor_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..300 {
            let n = rng.gen_range(1..=6);
            let m = Matrix::from_fn(n, |_, _| Integer::from(rng.gen_range(-9i64..10)));
            assert_eq!(m.det_bareiss(), m.det_cofactor());
        }
    }

    #[test]
    fn adjugate_small_cases() {
        assert_eq!(IntMatrix::identity(3).adjugate(), IntMatrix::identity(3));
        assert_eq!(
            int_matrix(&[&[1, 2], &[3, 4]]).adjugate(),
            int_matrix(&[&[4, -2], &[-3, 1]])
        );
    }

    #[test]
    fn adjugate_defining_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..50 {
            let m = Matrix::from_fn(4, |_, _| Integer::from(rng.gen_range(-5i64..6)));
            let det = m.det_bareiss();
            let prod = m.mul(&m.adjugate());
            let scaled = IntMatrix::from_fn(4, |i, j| {
                if i == j {
                    det.clone()
                } else {
                    Integer::zero()
                }
            });
            assert_eq!(prod, scaled);
        }
    }

    #[test]
    fn matrix_determinant_lemma() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let n = 5;
            let h = Matrix::from_fn(n, |_, _| Integer::from(rng.gen_range(-5i64..6)));
            let u: Vec<Integer> = (0..n).map(|_| Integer::from(rng.gen_range(-5i64..6))).collect();
            let v: Vec<Integer> = (0..n).map(|_| Integer::from(rng.gen_range(-5i64..6))).collect();
            let perturbed = Matrix::from_fn(n, |i, j| h.get(i, j) + &u[i] * &v[j]);
            let adj = h.adjugate();
            let mut vt_adj_u = Integer::zero();
            for i in 0..n {
                for j in 0..n {
                    vt_adj_u += &v[i] * adj.get(i, j) * &u[j];
                }
            }
            assert_eq!(perturbed.det_bareiss(), h.det_bareiss() + vt_adj_u);
        }
    }

    #[test]
    fn sum_matrix_examples() {
        assert_eq!(sum_matrix(p(5), &Integer::zero()), int_matrix(&[&[1, -1], &[-1, 1]]));
        assert_eq!(sum_matrix(p(5), &Integer::one()), int_matrix(&[&[2, 0], &[0, 2]]));
        let a7 = sum_matrix(p(7), &Integer::zero());
        let row1: Vec<Integer> = (0..3).map(|j| a7.get(0, j).clone()).collect();
        assert_eq!(row1, vec![Integer::from(1), Integer::from(1), Integer::from(-1)]);
    }

    #[test]
    fn diff_matrix_examples() {
        assert_eq!(
            diff_matrix(p(7), &Integer::zero()),
            int_matrix(&[&[1, 1, -1], &[1, 0, -1], &[1, 1, 0]])
        );
        let shifted = diff_matrix(p(7), &Integer::one());
        let base = diff_matrix(p(7), &Integer::zero());
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(shifted.get(i, j), &(base.get(i, j) + Integer::one()));
            }
        }
        let c5 = diff_matrix(p(5), &Integer::zero());
        let row2: Vec<Integer> = (0..2).map(|j| c5.get(1, j).clone()).collect();
        assert_eq!(row2, vec![Integer::from(1), Integer::from(0)]);
    }

    #[test]
    fn chapman_matrix_examples() {
        let m = chapman_matrix(p(5), ChapmanSize::Half);
        assert_eq!(m, int_matrix(&[&[1, -1], &[-1, -1]]));
        assert_eq!(m.det_bareiss(), Integer::from(-2));
        let m = chapman_matrix(p(7), ChapmanSize::HalfPlusOne);
        assert_eq!(m.dim(), 4);
        assert_eq!(m.get(0, 0), &Integer::from(1));
    }

    #[test]
    fn literature_matrix_examples() {
        let v = vsemirnov_matrix(p(5));
        assert_eq!(v, int_matrix(&[&[0, 1, -1], &[1, 0, 1], &[-1, 1, 0]]));
        assert_eq!(v.det_bareiss(), Integer::from(-2));

        let mp = sum_ones_matrix(p(7));
        for j in 0..4 {
            assert_eq!(mp.get(0, j), &Integer::one());
        }
        for i in 1..4 {
            for j in 0..4 {
                assert_eq!(mp.get(i, j), &Integer::from(legendre_i64(i as i64 + j as i64, p(7))));
            }
        }
    }

    #[test]
    fn vsemirnov_skew_pattern() {
        // entry(i,j) = (-1/p) * entry(j,i)
        for q in [p(5), p(7), p(11), p(13)] {
            let sign = Integer::from(legendre_i64(-1, q));
            let m = vsemirnov_matrix(q);
            for i in 0..m.dim() {
                for j in 0..m.dim() {
                    assert_eq!(m.get(i, j), &(&sign * m.get(j, i)));
                }
            }
        }
    }

    #[test]
    fn det_linear_examples() {
        let lin = det_linear(p(5), SymbolMatrix::Sum).unwrap();
        assert_eq!(lin, LinPoly::new(Integer::zero(), Integer::from(4)));
        let lin = det_linear(p(7), SymbolMatrix::Sum).unwrap();
        assert_eq!(lin, LinPoly::new(Integer::from(-4), Integer::from(4)));
        let lin = det_linear(p(7), SymbolMatrix::Diff).unwrap();
        assert_eq!(lin, LinPoly::new(Integer::from(-1), Integer::from(-1)));
    }

    #[test]
    fn lin_poly_display() {
        assert_eq!(LinPoly::new(Integer::from(-4), Integer::from(4)).to_string(), "-4+4x");
        assert_eq!(LinPoly::new(Integer::from(-1), Integer::from(-1)).to_string(), "-1-1x");
    }

    #[test]
    fn chapman_reindexing_identity() {
        // det[((i+j-1)/p)]_{(p-1)/2} = (-1/p) * det[((i+j)/p)]_{(p-1)/2}
        for q in crate::arith::primes_in_range(5, 60) {
            let lhs = chapman_matrix(q, ChapmanSize::Half).det_bareiss();
            let plain = Matrix::from_fn(q.half(), |i, j| {
                Integer::from(legendre_i64(i as i64 + j as i64 + 2, q))
            });
            let rhs = Integer::from(legendre_i64(-1, q)) * plain.det_bareiss();
            assert_eq!(lhs, rhs, "p={q}");
        }
    }
}
