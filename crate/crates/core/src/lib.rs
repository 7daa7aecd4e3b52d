//! Two-level fractional factorial designs: classification over F2,
//! exact indicator-function coefficients, maximal-determinant bounds, and
//! D-/A-/E-optimal design search.
//!
//! A design on `s` two-level factors is a replication-free subset of the
//! `2^s` full factorial with levels `-1` and `+1`. Mapping runs to `F2^s`
//! by `x -> (1-x)/2` turns questions about confounding into affine linear
//! algebra over F2: a design contained in no affine hyperplane is called
//! *affinely full-dimensional*, and such designs always have a nonsingular
//! main-effect information matrix. Everything downstream of that test,
//! indicator coefficients, 2-adic determinant criteria, maximal-determinant
//! bounds, optimal-design searches, is carried out in exact arithmetic.
//!
//! Quick tour:
//!
//! ```
//! use affdim::{classify, Design, DesignClass};
//!
//! let design = Design::parse("1 1 1\n1 -1 -1\n-1 1 -1\n-1 -1 1").unwrap();
//! let result = classify(&design);
//! assert_eq!(result.class, DesignClass::Regular);
//! assert_eq!(result.relations[0].word, vec![1, 2, 3]);
//! ```

pub mod bounds;
pub mod classify;
pub mod design;
pub mod error;
pub mod gf2;
pub mod indicator;
pub mod linalg;
pub mod poly;
pub mod search;

pub use classify::{
    affine_dimension, classify, confounding_kernel, is_identifiable, ClassificationResult,
    DefiningRelation, DesignClass,
};
pub use design::{Design, DesignMatrix};
pub use error::{Error, Result};
pub use gf2::BinaryMatrix;
pub use indicator::{
    classify_from_indicator, evaluate, indicator_coefficients, support, IndicatorPoly,
    IndicatorVerdict,
};
pub use linalg::{exact_det, gram_matrix, SquareMatrix};
pub use search::{
    a_value, argmax_set, conjecture_audit, d_value, e_value, exhaustive_search,
    saturated_exhaustive, saturated_local_search, AuditConfig, AuditRow, CriterionValue, LambdaMin,
    LocalSearchConfig, OptimalityCriterion, SearchResult,
};
