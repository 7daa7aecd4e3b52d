//! Exact criterion values of a single design.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

use crate::design::Design;
use crate::error::{Error, Result};
use crate::linalg::{adjugate_trace, char_poly, exact_det, gram_matrix};
use crate::poly::{rational_to_f64, squarefree_part, SmallestRoot};

/// `|det(M'M)|` exactly. Zero whenever `r < s + 1`.
pub fn d_value(design: &Design) -> BigInt {
    exact_det(&gram_matrix(&design.to_design_matrix())).abs()
}

/// `trace((M'M)^-1)` as an exact rational `trace(adj(M'M)) / det(M'M)`.
/// Errors when the information matrix is singular.
pub fn a_value(design: &Design) -> Result<BigRational> {
    let gram = gram_matrix(&design.to_design_matrix());
    let det = exact_det(&gram);
    if det.is_zero() {
        return Err(Error::Singular);
    }
    Ok(BigRational::new(adjugate_trace(&gram), det))
}

/// The smallest eigenvalue of `M'M`, isolated exactly.
///
/// Internally this is the smallest real root of the (square-free part of
/// the) characteristic polynomial, held in a rational interval of width at
/// most `2^-30`; a singular information matrix yields the exact value 0.
/// Comparisons between two values are decided exactly: intervals are
/// refined until they separate, and equal roots are certified through a
/// common polynomial factor.
#[derive(Debug, Clone)]
pub struct LambdaMin(SmallestRoot);

impl LambdaMin {
    pub fn lo(&self) -> &BigRational {
        self.0.lo()
    }

    pub fn hi(&self) -> &BigRational {
        self.0.hi()
    }

    /// True when the eigenvalue is a rational number held exactly.
    pub fn is_exact(&self) -> bool {
        self.0.is_exact()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    pub fn approx_hi_f64(&self) -> f64 {
        rational_to_f64(self.0.hi())
    }

    pub fn cmp_exact(&mut self, other: &mut LambdaMin) -> Ordering {
        self.0.cmp_exact(&mut other.0)
    }
}

/// Default isolation width, `2^-30`, below the 1e-9 reporting requirement.
pub(crate) fn isolation_width() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(1i64 << 30))
}

/// Smallest eigenvalue of a Gram matrix (PSD integer matrix).
pub(crate) fn lambda_min_of_gram(gram: &crate::linalg::SquareMatrix) -> LambdaMin {
    let poly = char_poly(gram);
    let reduced = squarefree_part(&poly);
    // Constant term of the characteristic polynomial vanishes exactly when
    // the matrix is singular; eigenvalues of a Gram matrix are >= 0.
    if poly[0].is_zero() {
        return LambdaMin(SmallestRoot::exact_rational(reduced, BigRational::zero()));
    }
    let upper = BigRational::from_integer(BigInt::from(gram.trace()));
    LambdaMin(SmallestRoot::isolate(
        reduced,
        BigRational::zero(),
        upper,
        &isolation_width(),
    ))
}

/// Smallest eigenvalue of the design's information matrix.
pub fn e_value(design: &Design) -> LambdaMin {
    lambda_min_of_gram(&gram_matrix(&design.to_design_matrix()))
}
