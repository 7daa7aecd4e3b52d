//! Maximal-determinant bounds for saturated `{-1,+1}` matrices and the
//! 2-adic machinery that classifies bound values.
//!
//! For an `r x r` matrix with `+/-1` entries the classical upper bounds on
//! `|det|` are, by residue of `r` mod 4:
//!
//! * `r = 0`: Hadamard, `r^{r/2}`;
//! * `r = 1`: Barba, `sqrt(2r-1) (r-1)^{(r-1)/2}`, an integer exactly when
//!   `2r-1` is a perfect square (a necessary condition for attainment);
//! * `r = 2`: Ehlich-Wojtas, `2(r-1)(r-2)^{(r-2)/2}`, always an integer;
//! * `r = 3`: a bound exists in the literature but no closed form is
//!   implemented here.
//!
//! Non-integer bounds are reported as floors via exact integer square
//! roots; nothing in this module touches floating point.

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Which specialized bound applies to a run size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundKind {
    Hadamard,
    Barba,
    EhlichWojtas,
    /// `r = 3 (mod 4)`: no specialized bound implemented.
    None,
}

/// Verdict of the saturated-design test of the determinant's 2-adic
/// valuation: below `r` or not.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SaturatedClass {
    #[serde(rename = "affinely-full-dimensional")]
    AffinelyFullDimensional,
    #[serde(rename = "not-affinely-full-dimensional")]
    NotAffinelyFullDimensional,
}

impl SaturatedClass {
    pub fn is_affinely_full_dimensional(self) -> bool {
        matches!(self, SaturatedClass::AffinelyFullDimensional)
    }
}

/// The mod-8 conjecture's prediction for the class of a maximal-determinant
/// saturated design.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Mod8Prediction {
    #[serde(rename = "affinely-full-dimensional")]
    AffinelyFullDimensional,
    #[serde(rename = "subset")]
    SubsetFractionalFactorial,
}

impl Mod8Prediction {
    pub fn is_affinely_full_dimensional(self) -> bool {
        matches!(self, Mod8Prediction::AffinelyFullDimensional)
    }
}

/// `r^{r/2}` exactly for even `r`, `floor(sqrt(r^r))` for odd `r`.
pub fn hadamard_bound(r: u64) -> BigInt {
    let base = BigInt::from(r);
    if r.is_multiple_of(2) {
        base.pow((r / 2) as u32)
    } else {
        base.pow(r as u32).sqrt()
    }
}

/// Floor of the Barba bound `sqrt(2r-1) (r-1)^{(r-1)/2}` for `r = 1 (mod 4)`.
///
/// When `2r - 1` is a perfect square the value is exact (and only then can
/// the bound be attained); otherwise it is the floor of an irrational.
pub fn barba_bound(r: u64) -> Result<BigInt> {
    if r % 4 != 1 {
        return Err(Error::WrongResidue {
            name: "Barba",
            r,
            expected: 1,
        });
    }
    if r < 5 {
        return Err(Error::RunsTooSmall { r, min: 5 });
    }
    let two_r_minus_1 = BigInt::from(2 * r - 1);
    let m = two_r_minus_1.sqrt();
    let half_power = BigInt::from(r - 1).pow(((r - 1) / 2) as u32);
    if &m * &m == two_r_minus_1 {
        Ok(m * half_power)
    } else {
        // floor(sqrt((2r-1) (r-1)^{r-1}))
        Ok((two_r_minus_1 * &half_power * &half_power).sqrt())
    }
}

/// Whether the Barba bound can possibly be attained at `r`: requires
/// `2r - 1` to be a perfect square.
pub fn barba_attainable(r: u64) -> bool {
    let v = 2 * r - 1;
    let m = v.sqrt();
    m * m == v
}

/// The Ehlich-Wojtas bound `2(r-1)(r-2)^{(r-2)/2}` for `r = 2 (mod 4)`;
/// always an exact integer in this residue class.
pub fn ehlich_wojtas_bound(r: u64) -> Result<BigInt> {
    if r % 4 != 2 {
        return Err(Error::WrongResidue {
            name: "Ehlich-Wojtas",
            r,
            expected: 2,
        });
    }
    if r < 6 {
        return Err(Error::RunsTooSmall { r, min: 6 });
    }
    Ok(BigInt::from(2 * (r - 1)) * BigInt::from(r - 2).pow(((r - 2) / 2) as u32))
}

/// Largest `v` with `2^v` dividing `n`. Errors on zero, whose valuation is
/// infinite (and which upstream signals a singular matrix).
pub fn two_adic_valuation(n: &BigInt) -> Result<u64> {
    if n.is_zero() {
        return Err(Error::Singular);
    }
    Ok(n.magnitude().trailing_zeros().unwrap())
}

/// The determinant test for saturated designs: affinely full-dimensional
/// exactly when `2^r` does not divide `det M`.
pub fn saturated_class_from_det(det: &BigInt, r: u64) -> Result<SaturatedClass> {
    let v = two_adic_valuation(det)?;
    if v < r {
        Ok(SaturatedClass::AffinelyFullDimensional)
    } else {
        Ok(SaturatedClass::NotAffinelyFullDimensional)
    }
}

/// The mod-8 rule: affinely full-dimensional for `r = 5, 6, 7 (mod 8)`,
/// subset fractional factorial for `r = 0, 1, 2, 3, 4 (mod 8)`.
pub fn mod8_prediction(r: u64) -> Mod8Prediction {
    match r % 8 {
        5..=7 => Mod8Prediction::AffinelyFullDimensional,
        _ => Mod8Prediction::SubsetFractionalFactorial,
    }
}

fn serialize_bigint<S: serde::Serializer>(
    x: &BigInt,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// One run size's bound summary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub r: u64,
    pub bound: BoundKind,
    /// Floor of the applicable bound. For `r = 3 (mod 4)` the generic
    /// Hadamard envelope `floor(r^{r/2})` is reported instead, since it
    /// holds for every `r`.
    #[serde(serialize_with = "serialize_bigint")]
    pub value: BigInt,
    /// True when `value` is the bound exactly rather than a floor.
    pub exact: bool,
    /// `Some(false)` when attainment is provably impossible (Barba with
    /// `2r - 1` not a square); `None` where attainment is an open or
    /// case-by-case question.
    pub achievable: Option<bool>,
    pub two_adic_valuation: u64,
    pub mod8_prediction: Mod8Prediction,
}

/// Builds the [`BoundReport`] for a run size.
pub fn bound_report(r: u64) -> Result<BoundReport> {
    if r == 0 {
        return Err(Error::RunsTooSmall { r, min: 1 });
    }
    let (kind, value, exact, achievable) = match r % 4 {
        0 => (BoundKind::Hadamard, hadamard_bound(r), true, None),
        1 => {
            if r >= 5 {
                let attainable = barba_attainable(r);
                (
                    BoundKind::Barba,
                    barba_bound(r)?,
                    attainable,
                    if attainable { None } else { Some(false) },
                )
            } else {
                // r = 1: the 1x1 matrix [1]; every formula degenerates to 1.
                (BoundKind::Barba, BigInt::one(), true, Some(true))
            }
        }
        2 => {
            if r >= 6 {
                (BoundKind::EhlichWojtas, ehlich_wojtas_bound(r)?, true, None)
            } else {
                // r = 2: [[1,1],[1,-1]] attains 2.
                (BoundKind::EhlichWojtas, BigInt::from(2), true, Some(true))
            }
        }
        _ => (
            BoundKind::None,
            hadamard_bound(r),
            r.is_multiple_of(2),
            None,
        ),
    };
    let v = two_adic_valuation(&value)?;
    Ok(BoundReport {
        r,
        bound: kind,
        value,
        exact,
        achievable,
        two_adic_valuation: v,
        mod8_prediction: mod8_prediction(r),
    })
}

/// Consistency report between a direct 2-adic valuation of the exact bound
/// and the closed-form parity rules for the two bound families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropositionReport {
    pub r: u64,
    pub residue_mod8: u64,
    /// Barba case with `2r - 1` not a perfect square: the bound cannot be
    /// attained and the parity rule says nothing.
    pub vacuous: bool,
    #[serde(serialize_with = "serialize_bigint")]
    pub bound: BigInt,
    pub valuation: u64,
    pub divisible_by_2_pow_r: bool,
    /// What the parity rule asserts for this residue.
    pub rule_divisible: bool,
    pub agrees: bool,
}

/// Checks the parity rules: for `r = 1 (mod 4)` with `2r - 1` square, the
/// Barba bound is divisible by `2^r` iff `r = 1 (mod 8)`; for
/// `r = 2 (mod 4)`, the Ehlich-Wojtas bound is divisible by `2^r` iff
/// `r = 2 (mod 8)`.
pub fn proposition_consistency(r: u64) -> Result<PropositionReport> {
    match r % 4 {
        1 => {
            if r < 5 {
                return Err(Error::RunsTooSmall { r, min: 5 });
            }
            let bound = barba_bound(r)?;
            if !barba_attainable(r) {
                let valuation = two_adic_valuation(&bound)?;
                return Ok(PropositionReport {
                    r,
                    residue_mod8: r % 8,
                    vacuous: true,
                    bound,
                    valuation,
                    divisible_by_2_pow_r: valuation >= r,
                    rule_divisible: r % 8 == 1,
                    agrees: true,
                });
            }
            let valuation = two_adic_valuation(&bound)?;
            let divisible = valuation >= r;
            let rule = r % 8 == 1;
            Ok(PropositionReport {
                r,
                residue_mod8: r % 8,
                vacuous: false,
                bound,
                valuation,
                divisible_by_2_pow_r: divisible,
                rule_divisible: rule,
                agrees: divisible == rule,
            })
        }
        2 => {
            if r < 6 {
                return Err(Error::RunsTooSmall { r, min: 6 });
            }
            let bound = ehlich_wojtas_bound(r)?;
            let valuation = two_adic_valuation(&bound)?;
            let divisible = valuation >= r;
            let rule = r % 8 == 2;
            Ok(PropositionReport {
                r,
                residue_mod8: r % 8,
                vacuous: false,
                bound,
                valuation,
                divisible_by_2_pow_r: divisible,
                rule_divisible: rule,
                agrees: divisible == rule,
            })
        }
        other => Err(Error::WrongResidue {
            name: "proposition consistency",
            r,
            expected: if other == 0 { 1 } else { 2 },
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn hadamard_values() {
        assert_eq!(hadamard_bound(4), big(16));
        assert_eq!(hadamard_bound(8), big(4096));
        assert_eq!(hadamard_bound(5), big(55)); // floor(sqrt(3125))
    }

    #[test]
    fn barba_values() {
        assert_eq!(barba_bound(5).unwrap(), big(48));
        assert_eq!(barba_bound(13).unwrap(), big(14_929_920));
        // 2r-1 = 49: exact, value 7 * 24^12.
        let expected = BigInt::from(7) * BigInt::from(24).pow(12);
        assert_eq!(barba_bound(25).unwrap(), expected);
        // 2r-1 = 17 is not a square: floored.
        assert_eq!(barba_bound(9).unwrap(), big(16_888));
        assert!(!barba_attainable(9));
        assert!(barba_attainable(5));
        assert!(matches!(barba_bound(6), Err(Error::WrongResidue { .. })));
    }

    #[test]
    fn ehlich_wojtas_values() {
        assert_eq!(ehlich_wojtas_bound(6).unwrap(), big(160));
        assert_eq!(ehlich_wojtas_bound(10).unwrap(), big(73_728));
        assert_eq!(ehlich_wojtas_bound(14).unwrap(), big(77_635_584));
        assert_eq!(
            ehlich_wojtas_bound(14).unwrap(),
            BigInt::from(13) * BigInt::from(3).pow(6) * BigInt::from(2).pow(13)
        );
        assert!(matches!(
            ehlich_wojtas_bound(8),
            Err(Error::WrongResidue { .. })
        ));
    }

    #[test]
    fn valuations() {
        assert_eq!(two_adic_valuation(&big(48)).unwrap(), 4);
        assert_eq!(two_adic_valuation(&big(4096)).unwrap(), 12);
        assert_eq!(two_adic_valuation(&big(-80)).unwrap(), 4);
        for odd in [1i64, 3, -9, 1234567] {
            assert_eq!(two_adic_valuation(&big(odd)).unwrap(), 0);
        }
        assert!(matches!(
            two_adic_valuation(&BigInt::zero()),
            Err(Error::Singular)
        ));
    }

    #[test]
    fn saturated_classification() {
        assert_eq!(
            saturated_class_from_det(&big(48), 5).unwrap(),
            SaturatedClass::AffinelyFullDimensional
        );
        assert_eq!(
            saturated_class_from_det(&big(4096), 8).unwrap(),
            SaturatedClass::NotAffinelyFullDimensional
        );
        // 14336 = 7 * 2^11, valuation 11 >= 9.
        assert_eq!(
            saturated_class_from_det(&big(14_336), 9).unwrap(),
            SaturatedClass::NotAffinelyFullDimensional
        );
        assert!(saturated_class_from_det(&BigInt::zero(), 4).is_err());
    }

    #[test]
    fn mod8_rule() {
        assert!(mod8_prediction(13).is_affinely_full_dimensional());
        assert!(!mod8_prediction(9).is_affinely_full_dimensional());
        assert!(mod8_prediction(86).is_affinely_full_dimensional());
        assert!(!mod8_prediction(12).is_affinely_full_dimensional());
    }

    #[test]
    fn proposition_examples() {
        let p5 = proposition_consistency(5).unwrap();
        assert_eq!(p5.valuation, 4);
        assert!(!p5.divisible_by_2_pow_r);
        assert!(p5.agrees && !p5.vacuous);

        let p10 = proposition_consistency(10).unwrap();
        assert_eq!(p10.valuation, 13);
        assert!(p10.divisible_by_2_pow_r && p10.agrees);

        let p6 = proposition_consistency(6).unwrap();
        assert_eq!(p6.valuation, 5);
        assert!(!p6.divisible_by_2_pow_r && p6.agrees);

        let p9 = proposition_consistency(9).unwrap();
        assert!(p9.vacuous);

        assert!(proposition_consistency(7).is_err());
    }

    #[test]
    fn propositions_agree_up_to_1000() {
        for r in 5..=1000u64 {
            match r % 4 {
                1 => {
                    let rep = proposition_consistency(r).unwrap();
                    assert!(rep.agrees, "Barba parity rule failed at r = {r}");
                }
                2 if r >= 6 => {
                    let rep = proposition_consistency(r).unwrap();
                    assert!(rep.agrees, "Ehlich-Wojtas parity rule failed at r = {r}");
                }
                _ => {}
            }
        }
    }

    #[test]
    fn specialized_bounds_beat_hadamard_envelope() {
        for r in (5..=101u64).step_by(4) {
            assert!(barba_bound(r).unwrap() < hadamard_bound(r));
        }
        for r in (6..=102u64).step_by(4) {
            assert!(ehlich_wojtas_bound(r).unwrap() < hadamard_bound(r));
        }
    }

    #[test]
    fn report_kinds_by_residue() {
        assert_eq!(bound_report(12).unwrap().bound, BoundKind::Hadamard);
        assert_eq!(bound_report(13).unwrap().bound, BoundKind::Barba);
        assert_eq!(bound_report(14).unwrap().bound, BoundKind::EhlichWojtas);
        assert_eq!(bound_report(15).unwrap().bound, BoundKind::None);
        assert_eq!(bound_report(6).unwrap().value, big(160));
        assert_eq!(bound_report(9).unwrap().achievable, Some(false));
        for r in 1..=40 {
            assert!(bound_report(r).unwrap().value >= BigInt::one());
        }
    }
}
