//! JSON and text rendering of library results.
//!
//! All JSON integers are emitted as exact arbitrary-precision numerals;
//! rationals and eigenvalue intervals are emitted as exact strings plus a
//! float approximation for convenience.

use affdim::bounds::{BoundKind, BoundReport, Mod8Prediction, PropositionReport, SaturatedClass};
use affdim::search::{AuditMethod, AuditRow, CriterionValue, SearchResult};
use affdim::{ClassificationResult, Design, DesignClass, IndicatorPoly};
use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

/// An exact arbitrary-precision JSON number.
pub fn big_number(x: &BigInt) -> Value {
    Value::Number(Number::from_string_unchecked(x.to_string()))
}

pub fn class_str(class: DesignClass) -> &'static str {
    match class {
        DesignClass::FullFactorial => "full-factorial",
        DesignClass::Regular => "regular",
        DesignClass::SubsetFractionalFactorial => "subset",
        DesignClass::AffinelyFullDimensional => "affinely-full-dimensional",
    }
}

fn saturated_class_str(class: SaturatedClass) -> &'static str {
    match class {
        SaturatedClass::AffinelyFullDimensional => "affinely-full-dimensional",
        SaturatedClass::NotAffinelyFullDimensional => "not-affinely-full-dimensional",
    }
}

fn prediction_str(p: Mod8Prediction) -> &'static str {
    match p {
        Mod8Prediction::AffinelyFullDimensional => "affinely-full-dimensional",
        Mod8Prediction::SubsetFractionalFactorial => "subset",
    }
}

pub fn relations_json(result: &ClassificationResult) -> Value {
    Value::Array(
        result
            .relations
            .iter()
            .map(|rel| json!({ "word": rel.word, "sign": rel.sign }))
            .collect(),
    )
}

pub fn design_rows(design: &Design) -> Value {
    Value::Array(
        design
            .runs()
            .iter()
            .map(|run| Value::Array(run.iter().map(|&x| json!(x)).collect()))
            .collect(),
    )
}

pub fn classification_json(design: &Design, result: &ClassificationResult) -> Value {
    json!({
        "factors": design.num_factors(),
        "runs": design.num_runs(),
        "class": class_str(result.class),
        "affine_dimension": result.affine_dim,
        "num_generators": result.num_generators,
        "relations": relations_json(result),
        "degenerate_factors": result.degenerate_factors,
        "identifiable": affdim::is_identifiable(design),
    })
}

/// Exact decimal string of `n / 2^s` (always terminating).
pub fn dyadic_decimal(numerator: i64, factors: usize) -> String {
    if numerator == 0 {
        return "0".to_string();
    }
    let sign = if numerator < 0 { "-" } else { "" };
    let scaled = BigInt::from(numerator.unsigned_abs()) * BigInt::from(5u8).pow(factors as u32);
    let digits = scaled.to_string();
    let s = factors;
    let (int_part, frac_part) = if digits.len() > s {
        let (a, b) = digits.split_at(digits.len() - s);
        (a.to_string(), b.to_string())
    } else {
        ("0".to_string(), format!("{digits:0>s$}"))
    };
    let frac = frac_part.trim_end_matches('0');
    if frac.is_empty() {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac}")
    }
}

/// The indicator document: nonzero terms sorted by word length, then
/// lexicographically by word.
pub fn indicator_json(poly: &IndicatorPoly) -> Value {
    let s = poly.num_factors();
    let mut terms: Vec<(Vec<usize>, i64)> = (0..1usize << s)
        .filter(|&mask| poly.numerator(mask) != 0)
        .map(|mask| {
            let word: Vec<usize> = (1..=s).filter(|j| (mask >> (j - 1)) & 1 == 1).collect();
            (word, poly.numerator(mask))
        })
        .collect();
    terms.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
    Value::Array(
        terms
            .into_iter()
            .map(|(word, n)| {
                json!({
                    "word": word,
                    "numerator": n,
                    "coefficient": dyadic_decimal(n, s),
                })
            })
            .collect(),
    )
}

fn bound_kind_str(kind: BoundKind) -> &'static str {
    match kind {
        BoundKind::Hadamard => "Hadamard",
        BoundKind::Barba => "Barba",
        BoundKind::EhlichWojtas => "EhlichWojtas",
        BoundKind::None => "None",
    }
}

pub fn bound_json(report: &BoundReport, proposition: Option<&PropositionReport>) -> Value {
    let mut doc = Map::new();
    doc.insert("runs".into(), json!(report.r));
    doc.insert("bound".into(), json!(bound_kind_str(report.bound)));
    doc.insert("value".into(), big_number(&report.value));
    doc.insert("exact".into(), json!(report.exact));
    doc.insert("achievable".into(), json!(report.achievable));
    doc.insert(
        "two_adic_valuation".into(),
        json!(report.two_adic_valuation),
    );
    doc.insert(
        "mod8_prediction".into(),
        json!(prediction_str(report.mod8_prediction)),
    );
    if let Some(p) = proposition {
        doc.insert(
            "proposition".into(),
            json!({
                "vacuous": p.vacuous,
                "divisible_by_2_pow_r": p.divisible_by_2_pow_r,
                "rule_divisible": p.rule_divisible,
                "agrees": p.agrees,
            }),
        );
    }
    Value::Object(doc)
}

fn rational_string(x: &num_rational::BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn value_json(value: &CriterionValue) -> Value {
    match value {
        CriterionValue::D(v) | CriterionValue::MaxDet(v) => big_number(v),
        CriterionValue::A(v) => json!({
            "numerator": big_number(v.numer()),
            "denominator": big_number(v.denom()),
            "approx": affdim::poly::rational_to_f64(v),
        }),
        CriterionValue::E(v) => json!({
            "lo": rational_string(v.lo()),
            "hi": rational_string(v.hi()),
            "exact": v.is_exact(),
            "approx": v.to_f64(),
        }),
    }
}

pub fn search_json(criterion: &str, result: &SearchResult) -> Value {
    json!({
        "criterion": criterion,
        "value": value_json(&result.value),
        "design": design_rows(&result.design),
        "class": class_str(result.classification.class),
        "relations": relations_json(&result.classification),
        "num_evaluated": result.num_evaluated,
        "num_maximizers": result.num_maximizers,
        "exhaustive": result.exhaustive,
        "seed": result.seed,
    })
}

fn method_str(m: AuditMethod) -> &'static str {
    match m {
        AuditMethod::Exhaustive => "exhaustive",
        AuditMethod::LocalSearch => "local-search",
        AuditMethod::Fixture => "fixture",
    }
}

pub fn audit_json(seed: u64, rows: &[AuditRow]) -> Value {
    json!({
        "seed": seed,
        "rows": rows.iter().map(|row| json!({
            "runs": row.r,
            "method": method_str(row.method),
            "achieved_det": big_number(&row.achieved_det),
            "target_det": big_number(&row.target_det),
            "verified": row.verified,
            "two_adic_valuation": row.two_adic_valuation,
            "class": saturated_class_str(row.determinant_class),
            "prediction": prediction_str(row.prediction),
            "table_class_afd": row.table_class_afd,
            "agrees": row.agrees,
            "certificate_level": row.certificate_level,
        })).collect::<Vec<_>>(),
    })
}

pub fn audit_text(rows: &[AuditRow]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:>4} {:<12} {:>14} {:>4} {:<8} {:<8} {:>8} {:>9}\n",
        "r", "method", "max|det|", "v2", "class", "mod8", "agrees", "verified"
    ));
    for row in rows {
        let class = if row.determinant_class.is_affinely_full_dimensional() {
            "afd"
        } else {
            "not-afd"
        };
        let pred = if row.prediction.is_affinely_full_dimensional() {
            "afd"
        } else {
            "subset"
        };
        out.push_str(&format!(
            "{:>4} {:<12} {:>14} {:>4} {:<8} {:<8} {:>8} {:>9}\n",
            row.r,
            method_str(row.method),
            row.achieved_det.to_string(),
            row.two_adic_valuation,
            class,
            pred,
            if row.agrees { "yes" } else { "NO" },
            if row.verified { "yes" } else { "NO" },
        ));
    }
    out
}

pub fn classification_text(design: &Design, result: &ClassificationResult) -> String {
    let mut out = format!(
        "{} runs, {} factors: {}\naffine dimension {} (k = {})\n",
        design.num_runs(),
        design.num_factors(),
        class_str(result.class),
        result.affine_dim,
        result.num_generators,
    );
    for rel in &result.relations {
        let word: Vec<String> = rel.word.iter().map(|j| format!("x{j}")).collect();
        out.push_str(&format!("relation {} = {}\n", word.join(""), rel.sign));
    }
    if !result.degenerate_factors.is_empty() {
        out.push_str(&format!(
            "degenerate (constant) factors: {:?}\n",
            result.degenerate_factors
        ));
    }
    out
}
