use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use super::poly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("expected {expected} entries for a square matrix, got {found}")]
    Shape { expected: usize, found: usize },
    #[error("entry ({i}, {j}) differs from ({j}, {i})")]
    NotSymmetric { i: usize, j: usize },
    #[error("principal index {0} out of range")]
    IndexOutOfRange(usize),
}

/// Dense symmetric matrix of arbitrary-precision integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSymMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntSymMatrix {
    pub fn new(n: usize, entries: Vec<BigInt>) -> Result<Self, MatrixError> {
        if entries.len() != n * n {
            return Err(MatrixError::Shape {
                expected: n * n,
                found: entries.len(),
            });
        }
        for i in 0..n {
            for j in i + 1..n {
                if entries[i * n + j] != entries[j * n + i] {
                    return Err(MatrixError::NotSymmetric { i, j });
                }
            }
        }
        Ok(IntSymMatrix { n, entries })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> i64) -> Result<Self, MatrixError> {
        let entries = (0..n * n).map(|k| BigInt::from(f(k / n, k % n))).collect();
        IntSymMatrix::new(n, entries)
    }

    pub fn from_rows(rows: &[&[i64]]) -> Result<Self, MatrixError> {
        let n = rows.len();
        let entries: Vec<BigInt> = rows.iter().flat_map(|r| r.iter().map(|&x| BigInt::from(x))).collect();
        IntSymMatrix::new(n, entries)
    }

    pub fn identity(n: usize) -> Self {
        IntSymMatrix::from_fn(n, |i, j| i64::from(i == j)).expect("identity is symmetric")
    }

    pub fn zero(n: usize) -> Self {
        IntSymMatrix::from_fn(n, |_, _| 0).expect("zero is symmetric")
    }

    pub fn diagonal(d: &[i64]) -> Self {
        IntSymMatrix::from_fn(d.len(), |i, j| if i == j { d[i] } else { 0 }).expect("diagonal is symmetric")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn row_sum(&self, i: usize) -> BigInt {
        self.entries[i * self.n..(i + 1) * self.n].iter().sum()
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.entries.iter().map(Signed::abs).max().unwrap_or_default()
    }

    /// Principal submatrix on the given (sorted, distinct) indices.
    pub fn principal_submatrix(&self, idx: &[usize]) -> Result<IntSymMatrix, MatrixError> {
        if let Some(&bad) = idx.iter().find(|&&i| i >= self.n) {
            return Err(MatrixError::IndexOutOfRange(bad));
        }
        let m = idx.len();
        let entries = (0..m * m)
            .map(|k| self.get(idx[k / m], idx[k % m]).clone())
            .collect();
        Ok(IntSymMatrix { n: m, entries })
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries
            .iter()
            .map(|x| x.to_f64().expect("entry representable as f64"))
            .collect()
    }

    /// `det(xI - M)` by Berkowitz's division-free algorithm.
    ///
    /// The characteristic polynomial of each leading principal block is
    /// obtained from the previous one by multiplying with a lower-triangular
    /// Toeplitz matrix whose first column is `1, -a_rr, -R·C, -R·A·C, …`.
    pub fn char_poly(&self) -> CharPolynomial {
        let n = self.n;
        // Descending coefficients of the current block's char poly.
        let mut v: Vec<BigInt> = vec![BigInt::one()];
        for r in 0..n {
            let mut t = Vec::with_capacity(r + 2);
            t.push(BigInt::one());
            t.push(-self.get(r, r).clone());
            // w = A_r^k C, starting from the column above the diagonal.
            let mut w: Vec<BigInt> = (0..r).map(|i| self.get(i, r).clone()).collect();
            for k in 0..r {
                let rc: BigInt = (0..r).map(|j| self.get(r, j) * &w[j]).sum();
                t.push(-rc);
                if k + 1 < r {
                    w = (0..r)
                        .map(|i| (0..r).map(|j| self.get(i, j) * &w[j]).sum())
                        .collect();
                }
            }
            let next: Vec<BigInt> = (0..r + 2)
                .map(|i| {
                    (0..=i.min(r))
                        .map(|j| &t[i - j] * &v[j])
                        .fold(BigInt::zero(), |acc, x| acc + x)
                })
                .collect();
            v = next;
        }
        v.reverse();
        CharPolynomial(IntPoly::from_coeffs(v))
    }
}

/// Monic characteristic polynomial `det(xI - M)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharPolynomial(IntPoly);

impl CharPolynomial {
    pub fn as_poly(&self) -> &IntPoly {
        &self.0
    }

    pub fn into_poly(self) -> IntPoly {
        self.0
    }

    /// Ascending coefficients `c_0, …, c_n` with `c_n = 1`.
    pub fn coeffs(&self) -> &[BigInt] {
        self.0.coeffs()
    }

    pub fn degree(&self) -> usize {
        self.0.degree().unwrap_or(0)
    }
}

impl std::fmt::Display for CharPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    /// Gaussian elimination over ℚ; independent of the Berkowitz path.
    fn det_rational(n: usize, a: &[BigInt]) -> BigInt {
        let mut m: Vec<BigRational> = a.iter().map(|x| BigRational::from_integer(x.clone())).collect();
        let mut det = BigRational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !m[r * n + c].is_zero()) else {
                return BigInt::zero();
            };
            if p != c {
                for k in 0..n {
                    m.swap(p * n + k, c * n + k);
                }
                det = -det;
            }
            let piv = m[c * n + c].clone();
            det *= &piv;
            for r in c + 1..n {
                let f = &m[r * n + c] / &piv;
                for k in c..n {
                    let sub = &f * &m[c * n + k];
                    m[r * n + k] -= sub;
                }
            }
        }
        assert!(det.is_integer());
        det.to_integer()
    }

    fn char_poly_at(m: &IntSymMatrix, x: i64) -> BigInt {
        let n = m.order();
        let shifted: Vec<BigInt> = (0..n * n)
            .map(|k| {
                let (i, j) = (k / n, k % n);
                let d = if i == j { BigInt::from(x) } else { BigInt::zero() };
                d - m.get(i, j)
            })
            .collect();
        det_rational(n, &shifted)
    }

    #[test]
    fn triangle_distance_laplacian() {
        let m = IntSymMatrix::from_rows(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]).unwrap();
        assert_eq!(m.char_poly().as_poly(), &IntPoly::from_i64s(&[0, 9, -6, 1]));
    }

    #[test]
    fn trivial_matrices() {
        assert_eq!(IntSymMatrix::zero(2).char_poly().as_poly(), &IntPoly::from_i64s(&[0, 0, 1]));
        assert_eq!(
            IntSymMatrix::identity(3).char_poly().as_poly(),
            &IntPoly::from_i64s(&[-1, 3, -3, 1])
        );
        assert_eq!(IntSymMatrix::zero(0).char_poly().as_poly(), &IntPoly::one());
        assert_eq!(
            IntSymMatrix::diagonal(&[1, 2, 3]).char_poly().as_poly(),
            &IntPoly::from_i64s(&[-6, 11, -6, 1])
        );
    }

    #[test]
    fn rejects_asymmetric_and_bad_shape() {
        assert_eq!(
            IntSymMatrix::from_rows(&[&[1, 2], &[3, 4]]),
            Err(MatrixError::NotSymmetric { i: 0, j: 1 })
        );
        assert_eq!(
            IntSymMatrix::new(2, vec![BigInt::zero(); 3]),
            Err(MatrixError::Shape { expected: 4, found: 3 })
        );
    }

    #[test]
    fn principal_submatrix_selects_indices() {
        let m = IntSymMatrix::from_fn(4, |i, j| (i * j) as i64).unwrap();
        let s = m.principal_submatrix(&[1, 3]).unwrap();
        assert_eq!(s, IntSymMatrix::from_rows(&[&[1, 3], &[3, 9]]).unwrap());
        assert_eq!(m.principal_submatrix(&[4]), Err(MatrixError::IndexOutOfRange(4)));
    }

    proptest! {
        #[test]
        fn berkowitz_matches_determinant_oracle(n in 1usize..7, vals in proptest::collection::vec(-30i64..30, 49)) {
            let m = IntSymMatrix::from_fn(n, |i, j| vals[i.min(j) * 7 + i.max(j)]).unwrap();
            let cp = m.char_poly();
            prop_assert_eq!(cp.degree(), n);
            prop_assert_eq!(cp.coeffs()[n].clone(), BigInt::one());
            for x in -3..=n as i64 + 3 {
                prop_assert_eq!(cp.as_poly().eval(&BigInt::from(x)), char_poly_at(&m, x));
            }
        }
    }
}
