//! Exhaustive maximal-determinant search over saturated `{-1,+1}` matrices.
//!
//! Row and column negations and permutations leave `|det|` unchanged, so
//! the first row and first column may be fixed to `+1`. That leaves
//! `(r-1)^2` free signs; `r = 6` is 2^25 matrices, the cap for exhaustive
//! treatment here.

use num_bigint::BigInt;

use super::{CriterionValue, SearchResult};
use crate::classify::classify;
use crate::design::Design;
use crate::error::{Error, Result};
use crate::linalg::det_i64;

/// Largest run size the exhaustive saturated search accepts.
pub const MAX_EXHAUSTIVE_RUNS: u64 = 6;

/// Known maximal determinants of saturated `{-1,+1}` matrices for desk
/// scale run sizes, with the class (affinely full-dimensional or not) of
/// the maximal-determinant design as established in the literature.
/// Values are the full determinant (not divided by `2^{r-1}`).
pub fn maxdet_table_entry(r: u64) -> Option<(BigInt, bool)> {
    let (value, afd): (i64, bool) = match r {
        4 => (16, false),
        5 => (48, true),
        6 => (160, true),
        7 => (576, true),
        8 => (4096, false),
        9 => (14_336, false),
        10 => (73_728, false),
        11 => (327_680, false),
        12 => (2_985_984, false),
        13 => (14_929_920, true),
        _ => return None,
    };
    Some((BigInt::from(value), afd))
}

/// Exhaustive `max |det M|` over all normalized saturated matrices of
/// order `r <= 6`. The normalization is lossless for the maximum value.
pub fn saturated_exhaustive(r: u64) -> Result<SearchResult> {
    if r < 2 {
        return Err(Error::RunsTooSmall { r, min: 2 });
    }
    if r > MAX_EXHAUSTIVE_RUNS {
        return Err(Error::SaturatedTooLarge {
            r,
            max: MAX_EXHAUSTIVE_RUNS,
        });
    }
    let n = r as usize;
    let free = (n - 1) * (n - 1);
    let mut matrix = vec![1i64; n * n];
    let mut scratch = vec![0i64; n * n];

    let mut best_value = -1i64;
    let mut best_key: Vec<u32> = Vec::new();
    let mut best_matrix = matrix.clone();
    let mut count = 0u64;

    for bits in 0u64..1u64 << free {
        for idx in 0..free {
            let i = idx / (n - 1) + 1;
            let j = idx % (n - 1) + 1;
            matrix[i * n + j] = if (bits >> idx) & 1 == 1 { -1 } else { 1 };
        }
        scratch.copy_from_slice(&matrix);
        let value = det_i64(&mut scratch, n).abs();
        if value < best_value {
            continue;
        }
        let key = design_key(&matrix, n);
        if value > best_value {
            best_value = value;
            best_key = key;
            best_matrix.copy_from_slice(&matrix);
            count = 1;
        } else {
            count += 1;
            if key < best_key {
                best_key = key;
                best_matrix.copy_from_slice(&matrix);
            }
        }
    }

    let design = design_from_matrix(&best_matrix, n)?;
    let classification = classify(&design);
    Ok(SearchResult {
        design,
        value: CriterionValue::MaxDet(BigInt::from(best_value)),
        num_evaluated: 1 << free,
        num_maximizers: count,
        classification,
        exhaustive: true,
        seed: None,
    })
}

/// Canonical key of the design obtained by stripping the ones column:
/// sorted packed run codes.
pub(super) fn design_key(matrix: &[i64], n: usize) -> Vec<u32> {
    let mut key: Vec<u32> = (0..n)
        .map(|i| {
            let mut code = 0u32;
            for j in 1..n {
                if matrix[i * n + j] == -1 {
                    code |= 1 << (j - 1);
                }
            }
            code
        })
        .collect();
    key.sort_unstable();
    key
}

pub(super) fn design_from_matrix(matrix: &[i64], n: usize) -> Result<Design> {
    let runs = (0..n)
        .map(|i| (1..n).map(|j| matrix[i * n + j] as i8).collect())
        .collect();
    Design::new(n - 1, runs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r4_reaches_hadamard_bound() {
        let result = saturated_exhaustive(4).unwrap();
        assert_eq!(result.value.as_maxdet().unwrap(), &BigInt::from(16));
        assert_eq!(result.num_evaluated, 1 << 9);
        assert!(result.exhaustive);
    }

    #[test]
    fn r5_maximum() {
        let result = saturated_exhaustive(5).unwrap();
        assert_eq!(result.value.as_maxdet().unwrap(), &BigInt::from(48));
        // The winner's determinant really is 48 when recomputed exactly.
        let m = result.design.to_design_matrix();
        let g = crate::linalg::gram_matrix(&m);
        assert_eq!(crate::linalg::exact_det(&g), BigInt::from(48 * 48));
    }

    #[test]
    fn r2_trivial() {
        let result = saturated_exhaustive(2).unwrap();
        assert_eq!(result.value.as_maxdet().unwrap(), &BigInt::from(2));
    }

    #[test]
    fn caps() {
        assert!(matches!(
            saturated_exhaustive(7),
            Err(Error::SaturatedTooLarge { .. })
        ));
        assert!(matches!(
            saturated_exhaustive(1),
            Err(Error::RunsTooSmall { .. })
        ));
    }

    #[test]
    fn table_rows() {
        assert_eq!(maxdet_table_entry(5), Some((BigInt::from(48), true)));
        assert_eq!(
            maxdet_table_entry(12),
            Some((BigInt::from(2_985_984), false))
        );
        assert_eq!(maxdet_table_entry(14), None);
    }
}
