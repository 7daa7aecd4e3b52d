//! Exact integer linear algebra: Gram matrices, fraction-free determinants
//! and characteristic polynomials.
//!
//! Everything here is integer arithmetic. Determinants use the Bareiss
//! fraction-free elimination, whose intermediate entries are minors of the
//! input, so nothing ever rounds. The public determinant returns an
//! arbitrary-precision integer; a machine-word variant exists for hot
//! enumeration loops whose inputs are small enough that every minor provably
//! fits in `i64`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::design::DesignMatrix;

/// A dense square integer matrix with machine-word entries.
///
/// Entries are `i64`; every matrix this crate builds (design matrices,
/// Gram matrices at desk scale) fits comfortably. Determinants of such
/// matrices can still be astronomically large, hence the big-integer
/// results below.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareMatrix {
    n: usize,
    a: Vec<i64>,
}

impl SquareMatrix {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        let a = rows.into_iter().flatten().collect();
        Self { n, a }
    }

    pub fn from_flat(n: usize, a: Vec<i64>) -> Self {
        assert_eq!(a.len(), n * n);
        Self { n, a }
    }

    pub fn identity(n: usize) -> Self {
        let mut a = vec![0; n * n];
        for i in 0..n {
            a[i * n + i] = 1;
        }
        Self { n, a }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.n + j]
    }

    pub fn entries(&self) -> &[i64] {
        &self.a
    }

    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self.entry(i, i)).sum()
    }

    /// The principal submatrix with row and column `k` removed.
    pub fn principal_minor_matrix(&self, k: usize) -> SquareMatrix {
        let rows = (0..self.n)
            .filter(|&i| i != k)
            .map(|i| {
                (0..self.n)
                    .filter(|&j| j != k)
                    .map(|j| self.entry(i, j))
                    .collect()
            })
            .collect();
        SquareMatrix::from_rows(rows)
    }
}

/// Exact Gram matrix `M'M` of a design matrix: `(s+1) x (s+1)`, symmetric,
/// with every diagonal entry equal to the run count.
pub fn gram_matrix(m: &DesignMatrix) -> SquareMatrix {
    let n = m.num_cols();
    let mut a = vec![0i64; n * n];
    for i in 0..m.num_rows() {
        let row = m.row(i);
        for p in 0..n {
            for q in p..n {
                a[p * n + q] += i64::from(row[p]) * i64::from(row[q]);
            }
        }
    }
    for p in 0..n {
        for q in 0..p {
            a[p * n + q] = a[q * n + p];
        }
    }
    SquareMatrix { n, a }
}

/// Exact determinant by Bareiss fraction-free elimination over big integers.
pub fn exact_det(m: &SquareMatrix) -> BigInt {
    let n = m.size();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<BigInt> = m.entries().iter().map(|&x| BigInt::from(x)).collect();
    let mut sign = 1i64;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(pivot) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                a.swap(k * n + j, pivot * n + j);
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                a[i * n + j] = num / &prev;
            }
            a[i * n + k] = BigInt::zero();
        }
        prev = a[k * n + k].clone();
    }
    let det = a[(n - 1) * n + (n - 1)].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Bareiss elimination on an `i64` scratch buffer.
///
/// Intermediate values are minors of the input matrix, so callers must
/// guarantee every minor fits in `i64` (Hadamard's bound on the input rows
/// is an easy sufficient check). Enumeration loops over `+/-1` matrices of
/// order <= 16 and Gram matrices with entries bounded by the run count
/// satisfy this with a wide margin.
pub fn det_i64(a: &mut [i64], n: usize) -> i64 {
    debug_assert_eq!(a.len(), n * n);
    if n == 0 {
        return 1;
    }
    let mut sign = 1i64;
    let mut prev = 1i64;
    for k in 0..n - 1 {
        if a[k * n + k] == 0 {
            let Some(pivot) = (k + 1..n).find(|&i| a[i * n + k] != 0) else {
                return 0;
            };
            for j in 0..n {
                a.swap(k * n + j, pivot * n + j);
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
            }
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }
    sign * a[(n - 1) * n + (n - 1)]
}

/// `trace(adj(M))`, the sum of the principal `(n-1)`-minors. Together with
/// the determinant this gives `trace(M^-1)` as an exact rational.
pub fn adjugate_trace(m: &SquareMatrix) -> BigInt {
    (0..m.size())
        .map(|k| exact_det(&m.principal_minor_matrix(k)))
        .sum()
}

/// Characteristic polynomial `det(xI - M)` by the Faddeev-LeVerrier
/// recurrence, exact in integers. Coefficients are returned in ascending
/// degree order; the leading coefficient is 1.
pub fn char_poly(m: &SquareMatrix) -> Vec<BigInt> {
    let n = m.size();
    let a: Vec<BigInt> = m.entries().iter().map(|&x| BigInt::from(x)).collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // mk tracks M_k = A M_{k-1} + c_{n-k+1} A; c_{n-k} = -tr(M_k)/k.
    let mut mk = a.clone();
    for k in 1..=n {
        let tr: BigInt = (0..n).map(|i| mk[i * n + i].clone()).sum();
        let c = -tr / BigInt::from(k as i64);
        coeffs[n - k] = c.clone();
        if k == n {
            break;
        }
        for i in 0..n {
            mk[i * n + i] += &c;
        }
        let mut next = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                if a[i * n + l].is_zero() {
                    continue;
                }
                for j in 0..n {
                    let t = &a[i * n + l] * &mk[l * n + j];
                    next[i * n + j] += t;
                }
            }
        }
        mk = next;
    }
    coeffs
}

/// Absolute value helper used by search code.
pub fn abs_big(x: BigInt) -> BigInt {
    x.abs()
}
