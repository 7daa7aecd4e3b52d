//! Exact indicator-function coefficients.
//!
//! The indicator of a design is the unique square-free polynomial on the
//! full factorial that is 1 on the design's runs and 0 elsewhere. Its
//! coefficient on the contrast of a factor subset `I` is `n_I / 2^s` with
//! `n_I = sum over runs of prod_{j in I} x_j`, an integer. The whole
//! coefficient table is one Walsh-Hadamard transform of the design's 0/1
//! occupancy vector, so it is computed densely and exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::classify::{classify, DesignClass};
use crate::design::Design;
use crate::error::{Error, Result};

/// Hard cap on factors for the dense transform (2^s numerators stored).
pub const MAX_FACTORS: usize = 16;

/// Integer numerators `n_I` of the indicator coefficients `b_I = n_I / 2^s`,
/// indexed by the factor-subset mask (bit `j-1` set means factor `j` in `I`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndicatorPoly {
    factors: usize,
    numerators: Vec<i64>,
}

/// What the coefficient table alone can decide about a design's class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum IndicatorVerdict {
    /// `|n_I| < n_empty` for every nonempty `I`.
    #[serde(rename = "affinely-full-dimensional")]
    AffinelyFullDimensional,
    /// Some nonempty `I` has `|n_I| = n_empty`: a constant contrast, hence
    /// containment in a regular fraction. Whether the design is regular or
    /// a proper subset needs the run count; see [`refine_class`].
    #[serde(rename = "not-affinely-full-dimensional")]
    NotAffinelyFullDimensional,
}

impl IndicatorPoly {
    pub fn num_factors(&self) -> usize {
        self.factors
    }

    /// Numerator `n_I` for the subset mask `I`.
    pub fn numerator(&self, mask: usize) -> i64 {
        self.numerators[mask]
    }

    pub fn numerators(&self) -> &[i64] {
        &self.numerators
    }

    /// `n_empty`, which always equals the run count.
    pub fn constant_numerator(&self) -> i64 {
        self.numerators[0]
    }

    /// Exact coefficient `b_I = n_I / 2^s`.
    pub fn coefficient(&self, mask: usize) -> BigRational {
        BigRational::new(
            BigInt::from(self.numerators[mask]),
            BigInt::from(1i64) << self.factors,
        )
    }
}

/// Computes all `2^s` numerators of a design's indicator, exactly, via the
/// in-place Walsh-Hadamard butterfly (`s * 2^s` additions).
pub fn indicator_coefficients(design: &Design) -> Result<IndicatorPoly> {
    let s = design.num_factors();
    if s > MAX_FACTORS {
        return Err(Error::TooManyFactors {
            factors: s,
            max: MAX_FACTORS,
        });
    }
    let size = 1usize << s;
    let mut values = vec![0i64; size];
    for i in 0..design.num_runs() {
        values[design.run_mask(i) as usize] = 1;
    }
    walsh_hadamard(&mut values);
    Ok(IndicatorPoly {
        factors: s,
        numerators: values,
    })
}

fn walsh_hadamard(values: &mut [i64]) {
    let n = values.len();
    let mut h = 1;
    while h < n {
        for block in (0..n).step_by(2 * h) {
            for i in block..block + h {
                let (a, b) = (values[i], values[i + h]);
                values[i] = a + b;
                values[i + h] = a - b;
            }
        }
        h *= 2;
    }
}

/// Evaluates the polynomial at a point of `{-1,+1}^s`, exactly.
pub fn evaluate(poly: &IndicatorPoly, point: &[i8]) -> Result<BigRational> {
    if point.len() != poly.factors {
        return Err(Error::DimensionMismatch {
            expected: poly.factors,
            got: point.len(),
        });
    }
    let mut mask = 0usize;
    for (j, &x) in point.iter().enumerate() {
        if x == -1 {
            mask |= 1 << j;
        } else if x != 1 {
            return Err(Error::InvalidLevel {
                row: 1,
                col: j + 1,
                value: x,
            });
        }
    }
    let mut total = 0i64;
    for (i_mask, &n) in poly.numerators.iter().enumerate() {
        // X_I(x) = (-1)^{|I meets the -1 coordinates|}
        if (i_mask & mask).count_ones().is_multiple_of(2) {
            total += n;
        } else {
            total -= n;
        }
    }
    Ok(BigRational::new(
        BigInt::from(total),
        BigInt::from(1i64) << poly.factors,
    ))
}

/// The affinely-full-dimensional test read directly off the coefficients:
/// AFD exactly when `|n_I| < n_empty` for every nonempty `I`.
pub fn classify_from_indicator(poly: &IndicatorPoly) -> IndicatorVerdict {
    let n0 = poly.numerators[0];
    let afd = poly.numerators[1..].iter().all(|&n| n.abs() < n0);
    if afd {
        IndicatorVerdict::AffinelyFullDimensional
    } else {
        IndicatorVerdict::NotAffinelyFullDimensional
    }
}

/// Recovers the design a valid indicator polynomial supports.
///
/// The inverse transform of the numerators must land in `{0, 2^s}` at every
/// point; anything else means the input was not the indicator of a design.
pub fn support(poly: &IndicatorPoly) -> Result<Design> {
    let mut values = poly.numerators.clone();
    walsh_hadamard(&mut values); // involution up to the factor 2^s
    let full = 1i64 << poly.factors;
    let mut masks = Vec::new();
    for (point, &v) in values.iter().enumerate() {
        if v == full {
            masks.push(point as u32);
        } else if v != 0 {
            return Err(Error::NotAnIndicator {
                point,
                value: format!("{}/{}", v, full),
            });
        }
    }
    if masks.is_empty() {
        return Err(Error::EmptyDesign);
    }
    Design::from_masks(poly.factors, &masks)
}

/// Full class label via the indicator route: the dichotomy from the
/// coefficients, refined through the ordinary classifier on the support.
pub fn refine_class(poly: &IndicatorPoly) -> Result<DesignClass> {
    match classify_from_indicator(poly) {
        IndicatorVerdict::AffinelyFullDimensional => Ok(DesignClass::AffinelyFullDimensional),
        IndicatorVerdict::NotAffinelyFullDimensional => Ok(classify(&support(poly)?).class),
    }
}
