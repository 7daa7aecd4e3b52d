//! The regular / subset / affinely-full-dimensional classifier.
//!
//! A design's runs, mapped to `F2^s` by `x -> (1-x)/2`, span an affine
//! subspace. Its dimension `d` decides everything: `d = s` means the design
//! sits in no affine hyperplane; `d < s` means the design is contained in a
//! regular fraction cut out by `k = s - d` independent defining relations,
//! and it either fills that fraction (`r = 2^d`, regular) or is a proper
//! subset of it.

use serde::Serialize;

use crate::design::Design;
use crate::linalg::{exact_det, gram_matrix};
use num_traits::Zero;

/// Class labels for two-level designs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DesignClass {
    /// All `2^s` points are present.
    #[serde(rename = "full-factorial")]
    FullFactorial,
    /// Exactly the solution set of its defining relations (`r = 2^d`, `d < s`).
    #[serde(rename = "regular")]
    Regular,
    /// A proper subset of some regular fraction (`d < s`, `r < 2^d`).
    #[serde(rename = "subset")]
    SubsetFractionalFactorial,
    /// Contained in no affine hyperplane over F2 (`d = s`, `r < 2^s`).
    #[serde(rename = "affinely-full-dimensional")]
    AffinelyFullDimensional,
}

impl DesignClass {
    pub fn is_affinely_full_dimensional(self) -> bool {
        matches!(self, DesignClass::AffinelyFullDimensional)
    }
}

/// A word of factor indices together with the constant sign the contrast
/// takes on every run: `prod_{j in word} x_j = sign`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DefiningRelation {
    pub word: Vec<usize>,
    pub sign: i8,
}

impl DefiningRelation {
    /// Checks the relation against a single run (1-based factor indices).
    pub fn holds_on(&self, run: &[i8]) -> bool {
        let prod: i32 = self.word.iter().map(|&j| i32::from(run[j - 1])).product();
        prod == i32::from(self.sign)
    }
}

/// Full classifier output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationResult {
    pub class: DesignClass,
    /// Dimension over F2 of the affine span of the binary points.
    pub affine_dim: usize,
    /// `s - affine_dim`, the number of independent defining relations.
    pub num_generators: usize,
    /// Canonical basis of the confounding kernel; empty iff `d = s`.
    pub relations: Vec<DefiningRelation>,
    /// Factors constant across all runs. Such a design can never be
    /// affinely full-dimensional; reported rather than rejected.
    pub degenerate_factors: Vec<usize>,
}

/// Dimension over F2 of the affine span of the design's binary points;
/// equals `rank([1 | X]) - 1` for the ones-column-augmented bit matrix.
pub fn affine_dimension(design: &Design) -> usize {
    design.to_binary().rank() - 1
}

fn word_indices(v: u64, factors: usize) -> Vec<usize> {
    (1..=factors).filter(|j| (v >> j) & 1 == 1).collect()
}

/// Canonical basis of the confounding kernel `{c : [1|X] c = 0}` over F2.
///
/// Each kernel vector `(c_0, c_1..c_s)` is one defining relation: the word
/// is `{j : c_j = 1}` and the sign is `(-1)^{c_0}`. The basis returned is
/// the minimum-weight one: candidate vectors of the kernel are ordered by
/// word length, then lexicographically by word, and picked greedily while
/// independent. This is deterministic and reproduces the generator sets
/// conventionally quoted for regular fractions.
pub fn confounding_kernel(design: &Design) -> Vec<DefiningRelation> {
    let s = design.num_factors();
    let raw = design.to_binary().kernel_basis();
    let k = raw.len();
    if k == 0 {
        return Vec::new();
    }

    // Enumerate the kernel span and pick a minimal-weight independent set.
    // Kernel dimensions beyond 20 would make the span enumeration silly;
    // fall back to the echelon basis there (still deterministic).
    let chosen: Vec<u64> = if k <= 20 {
        let mut span: Vec<u64> = Vec::with_capacity((1usize << k) - 1);
        for combo in 1u64..(1 << k) {
            let mut v = 0u64;
            for (i, &b) in raw.iter().enumerate() {
                if (combo >> i) & 1 == 1 {
                    v ^= b;
                }
            }
            span.push(v);
        }
        span.sort_unstable_by(|&a, &b| {
            let wa = (a >> 1).count_ones();
            let wb = (b >> 1).count_ones();
            wa.cmp(&wb)
                .then_with(|| word_indices(a, s).cmp(&word_indices(b, s)))
        });
        let mut reduced: Vec<u64> = Vec::new(); // XOR basis, by leading bit
        let mut picked = Vec::with_capacity(k);
        for &v in &span {
            let mut x = v;
            for &b in &reduced {
                let lead = 63 - b.leading_zeros();
                if (x >> lead) & 1 == 1 {
                    x ^= b;
                }
            }
            if x != 0 {
                reduced.push(x);
                reduced.sort_unstable_by_key(|b| std::cmp::Reverse(63 - b.leading_zeros()));
                picked.push(v);
                if picked.len() == k {
                    break;
                }
            }
        }
        picked
    } else {
        raw
    };

    chosen
        .into_iter()
        .map(|v| DefiningRelation {
            word: word_indices(v, s),
            sign: if v & 1 == 1 { -1 } else { 1 },
        })
        .collect()
}

/// Classifies a design by its affine span over F2.
pub fn classify(design: &Design) -> ClassificationResult {
    let s = design.num_factors();
    let r = design.num_runs();
    let d = affine_dimension(design);
    let full = s < usize::BITS as usize && r == 1usize << s;
    let class = if full {
        DesignClass::FullFactorial
    } else if d == s {
        DesignClass::AffinelyFullDimensional
    } else if r == 1usize << d {
        DesignClass::Regular
    } else {
        DesignClass::SubsetFractionalFactorial
    };
    ClassificationResult {
        class,
        affine_dim: d,
        num_generators: s - d,
        relations: confounding_kernel(design),
        degenerate_factors: design.constant_factors(),
    }
}

/// True iff the Gram matrix `M'M` is nonsingular, i.e. all main-effect
/// parameters are simultaneously identifiable. Short-circuits to `false`
/// when `r < s + 1` (rank deficiency is forced).
pub fn is_identifiable(design: &Design) -> bool {
    if design.num_runs() < design.num_factors() + 1 {
        return false;
    }
    !exact_det(&gram_matrix(&design.to_design_matrix())).is_zero()
}
