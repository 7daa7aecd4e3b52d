//! Optimal-design search: exact D/A/E criterion values, exhaustive subset
//! enumeration, exhaustive and stochastic saturated maximal-determinant
//! search, and the mod-8 conjecture audit.

mod audit;
mod exhaustive;
mod local;
mod saturated;
mod values;

pub use audit::{conjecture_audit, hadamard_fixture, AuditConfig, AuditMethod, AuditRow};
pub use exhaustive::{argmax_set, exhaustive_search, DEFAULT_BUDGET};
pub use local::{saturated_local_search, LocalSearchConfig};
pub use saturated::{maxdet_table_entry, saturated_exhaustive, MAX_EXHAUSTIVE_RUNS};
pub use values::{a_value, d_value, e_value, LambdaMin};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::classify::ClassificationResult;
use crate::design::Design;

/// Which design criterion a search optimizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OptimalityCriterion {
    /// Maximize `|det(M'M)|`.
    #[serde(rename = "d")]
    D,
    /// Minimize `trace((M'M)^-1)` over nonsingular information matrices.
    #[serde(rename = "a")]
    A,
    /// Maximize the smallest eigenvalue of `M'M`.
    #[serde(rename = "e")]
    E,
}

/// The optimal value, in the exact representation native to each criterion.
#[derive(Debug, Clone)]
pub enum CriterionValue {
    /// `|det(M'M)|` (subset searches).
    D(BigInt),
    /// `trace((M'M)^-1)` (subset searches, minimized).
    A(BigRational),
    /// Smallest eigenvalue of `M'M` (subset searches, maximized).
    E(LambdaMin),
    /// `|det M|` of a saturated square design matrix (maxdet searches).
    MaxDet(BigInt),
}

impl CriterionValue {
    pub fn as_d(&self) -> Option<&BigInt> {
        match self {
            CriterionValue::D(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_maxdet(&self) -> Option<&BigInt> {
        match self {
            CriterionValue::MaxDet(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_a(&self) -> Option<&BigRational> {
        match self {
            CriterionValue::A(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_e(&self) -> Option<&LambdaMin> {
        match self {
            CriterionValue::E(v) => Some(v),
            _ => None,
        }
    }
}

/// Outcome of any search in this module.
#[derive(Debug, Clone)]
pub struct SearchResult {
    /// The winning design; on value ties, the one with the smallest
    /// canonical key (sorted run codes compared lexicographically).
    pub design: Design,
    pub value: CriterionValue,
    /// Candidates whose criterion value was computed.
    pub num_evaluated: u64,
    /// Distinct candidates attaining the optimum (within the searched,
    /// normalized space) for exhaustive searches; for local search, the
    /// number of restarts whose local optimum attained the best value.
    pub num_maximizers: u64,
    pub classification: ClassificationResult,
    /// True when the search provably covered its whole space.
    pub exhaustive: bool,
    /// Seed used, for stochastic searches.
    pub seed: Option<u64>,
}
