//! JSON encodings for series, groups, and reports.
//!
//! Every number leaves as an exact decimal string, valuations as
//! "num/den" rationals, torsion points in "level:exponent" notation.  No
//! floats, no timestamps; objects serialize with sorted keys, so a fixed
//! input produces byte-identical output.

use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use crate::coeff::Zp;
use crate::eisenstein::EisensteinRing;
use crate::error::{Error, Result};
use crate::lubin_tate::{AxiomReport, LtGroup, LtKind};
use crate::padic::{PadicApprox, Rat, Valuation};
use crate::rigidity::{
    Detection, DichotomyOutcome, DichotomyReport, ExponentSpec, SpecialWitness, TranslateCheck,
};
use crate::series::{ChangeOfVariables, MultiSeries};
use crate::torsion::{ScanReport, TorsionTuple};

pub fn rat_string(r: Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rat(text: &str) -> Result<Rat> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let n = i64::from_str(num.trim())
        .map_err(|_| Error::InvalidInput(format!("bad rational numerator {:?}", num)))?;
    let d = i64::from_str(den.trim())
        .map_err(|_| Error::InvalidInput(format!("bad rational denominator {:?}", den)))?;
    if d == 0 {
        return Err(Error::InvalidInput("rational with denominator zero".into()));
    }
    Ok(Rat::new(n, d))
}

pub fn valuation_to_json(v: &Valuation) -> Value {
    match v {
        Valuation::Exact(r) => json!({ "certainty": "exact", "value": rat_string(*r) }),
        Valuation::AtLeast(r) => json!({ "certainty": "at-least", "value": rat_string(*r) }),
    }
}

fn obj_field<'v>(value: &'v Value, field: &str) -> Result<&'v Value> {
    value
        .get(field)
        .ok_or_else(|| Error::InvalidInput(format!("missing field {:?}", field)))
}

fn u64_field(value: &Value, field: &str) -> Result<u64> {
    obj_field(value, field)?
        .as_u64()
        .ok_or_else(|| Error::InvalidInput(format!("field {:?} is not an integer", field)))
}

fn str_field<'v>(value: &'v Value, field: &str) -> Result<&'v str> {
    obj_field(value, field)?
        .as_str()
        .ok_or_else(|| Error::InvalidInput(format!("field {:?} is not a string", field)))
}

fn parse_biguint(text: &str) -> Result<BigUint> {
    BigUint::from_str(text.trim())
        .map_err(|_| Error::InvalidInput(format!("bad decimal string {:?}", text)))
}

/// Series over Z_p.  Coefficients are reduced to the ring precision on
/// the way out, so emission and re-ingestion are mutually inverse.
pub fn series_to_json(s: &MultiSeries<Zp>) -> Value {
    let precision = s.precision();
    let terms: Vec<Value> = s
        .terms()
        .map(|(exp, coeff)| {
            json!({
                "exp": exp,
                "coeff": coeff.reduce_precision(precision).to_decimal(),
            })
        })
        .collect();
    let mut obj = Map::new();
    obj.insert("p".into(), json!(s.prime()));
    obj.insert("precision".into(), json!(precision));
    obj.insert("degree_bound".into(), json!(s.degree_bound()));
    obj.insert("vars".into(), json!(s.nvars()));
    obj.insert("coeff_ring".into(), json!("Zp"));
    obj.insert("terms".into(), Value::Array(terms));
    if s.is_truncated() {
        obj.insert("truncated".into(), json!(true));
    }
    Value::Object(obj)
}

pub fn series_from_json(value: &Value) -> Result<MultiSeries<Zp>> {
    let p = u64_field(value, "p")?;
    let precision = u64_field(value, "precision")? as u32;
    let degree_bound = u64_field(value, "degree_bound")? as usize;
    let nvars = u64_field(value, "vars")? as usize;
    match obj_field(value, "coeff_ring")? {
        Value::String(s) if s == "Zp" => {}
        other => {
            return Err(Error::InvalidInput(format!(
                "only Zp coefficient series can be ingested, got {}",
                other
            )))
        }
    }
    let truncated = value.get("truncated").and_then(Value::as_bool).unwrap_or(false);
    let terms_json = obj_field(value, "terms")?
        .as_array()
        .ok_or_else(|| Error::InvalidInput("\"terms\" is not an array".into()))?;
    let mut terms = Vec::with_capacity(terms_json.len());
    for t in terms_json {
        let exp: Vec<u32> = obj_field(t, "exp")?
            .as_array()
            .ok_or_else(|| Error::InvalidInput("term \"exp\" is not an array".into()))?
            .iter()
            .map(|e| {
                e.as_u64()
                    .map(|e| e as u32)
                    .ok_or_else(|| Error::InvalidInput("non-integer exponent".into()))
            })
            .collect::<Result<_>>()?;
        let coeff = PadicApprox::new(p, precision, parse_biguint(str_field(t, "coeff")?)?);
        terms.push((exp, coeff));
    }
    MultiSeries::from_terms(Zp::new(p, precision), nvars, degree_bound, terms, truncated)
}

/// Ring descriptor for series over an Eisenstein extension.
pub fn ring_descriptor(ring: &EisensteinRing) -> Value {
    json!({
        "p": ring.prime(),
        "precision": ring.precision(),
        "label": ring.label(),
        "minpoly": ring.minpoly().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    })
}

/// Series over an Eisenstein ring: coefficients become arrays of decimal
/// strings in the power basis of the uniformizer.
pub fn ring_series_to_json(s: &MultiSeries<Arc<EisensteinRing>>) -> Value {
    let terms: Vec<Value> = s
        .terms()
        .map(|(exp, coeff)| {
            let digits: Vec<String> =
                coeff.coeffs().iter().map(|c| c.to_decimal()).collect();
            json!({ "exp": exp, "coeff": digits })
        })
        .collect();
    let mut obj = Map::new();
    obj.insert("p".into(), json!(s.prime()));
    obj.insert("precision".into(), json!(s.precision()));
    obj.insert("degree_bound".into(), json!(s.degree_bound()));
    obj.insert("vars".into(), json!(s.nvars()));
    obj.insert("coeff_ring".into(), ring_descriptor(s.ring()));
    obj.insert("terms".into(), Value::Array(terms));
    if s.is_truncated() {
        obj.insert("truncated".into(), json!(true));
    }
    Value::Object(obj)
}

/// Group parameters: {"p": 3, "f": "cyclotomic" | "standard" | {series}}.
/// A custom series carries its own precision and window; the group
/// constructor revalidates both against the run configuration.
pub fn lt_params_from_json(value: &Value) -> Result<(u64, LtKind)> {
    let p = u64_field(value, "p")?;
    let kind = match obj_field(value, "f")? {
        Value::String(s) if s == "cyclotomic" => LtKind::Cyclotomic,
        Value::String(s) if s == "standard" => LtKind::Standard,
        Value::String(other) => {
            return Err(Error::InvalidInput(format!(
                "unknown distinguished series {:?}",
                other
            )))
        }
        custom => LtKind::Custom(series_from_json(custom)?),
    };
    Ok((p, kind))
}

pub fn lt_params_to_json(group: &LtGroup) -> Value {
    let f = match group.kind() {
        LtKind::Cyclotomic => json!("cyclotomic"),
        LtKind::Standard => json!("standard"),
        LtKind::Custom(series) => series_to_json(series),
    };
    json!({ "p": group.prime(), "f": f })
}

/// Ideal: {"generators": [series, ...]}.
pub fn ideal_from_json(value: &Value) -> Result<Vec<MultiSeries<Zp>>> {
    let gens = obj_field(value, "generators")?
        .as_array()
        .ok_or_else(|| Error::InvalidInput("\"generators\" is not an array".into()))?;
    gens.iter().map(series_from_json).collect()
}

pub fn ideal_to_json(generators: &[MultiSeries<Zp>]) -> Value {
    json!({ "generators": generators.iter().map(series_to_json).collect::<Vec<_>>() })
}

/// Change of variables: permutation plus strictly-lower-triangular
/// exponent entries mod p^modulus_exp.
pub fn cv_to_json(cv: &ChangeOfVariables) -> Value {
    let mut entries = Vec::new();
    for i in 0..cv.nvars() {
        for j in 0..i {
            let e = cv.entry(i, j);
            if !e.is_zero() {
                entries.push(json!({ "row": i, "col": j, "value": e.to_decimal() }));
            }
        }
    }
    json!({
        "p": cv.prime(),
        "nvars": cv.nvars(),
        "modulus_exp": cv.modulus_exp(),
        "perm": cv.perm(),
        "entries": entries,
    })
}

pub fn cv_from_json(value: &Value) -> Result<ChangeOfVariables> {
    let p = u64_field(value, "p")?;
    let nvars = u64_field(value, "nvars")? as usize;
    let modulus_exp = u64_field(value, "modulus_exp")? as u32;
    let mut cv = ChangeOfVariables::identity(p, nvars, modulus_exp);
    if let Some(perm) = value.get("perm") {
        let perm: Vec<usize> = perm
            .as_array()
            .ok_or_else(|| Error::InvalidInput("\"perm\" is not an array".into()))?
            .iter()
            .map(|v| {
                v.as_u64()
                    .map(|v| v as usize)
                    .ok_or_else(|| Error::InvalidInput("non-integer permutation entry".into()))
            })
            .collect::<Result<_>>()?;
        cv = cv.with_permutation(perm)?;
    }
    if let Some(entries) = value.get("entries") {
        for e in entries
            .as_array()
            .ok_or_else(|| Error::InvalidInput("\"entries\" is not an array".into()))?
        {
            let row = u64_field(e, "row")? as usize;
            let col = u64_field(e, "col")? as usize;
            let v = PadicApprox::new(p, modulus_exp, parse_biguint(str_field(e, "value")?)?);
            cv = cv.with_entry(row, col, v)?;
        }
    }
    Ok(cv)
}

/// Tuples document: {"p": 3, "tuples": ["2:4,1:1", ...]}.
pub fn tuples_from_json(value: &Value) -> Result<Vec<TorsionTuple>> {
    let p = u64_field(value, "p")?;
    obj_field(value, "tuples")?
        .as_array()
        .ok_or_else(|| Error::InvalidInput("\"tuples\" is not an array".into()))?
        .iter()
        .map(|t| {
            let text = t
                .as_str()
                .ok_or_else(|| Error::InvalidInput("tuple entry is not a string".into()))?;
            TorsionTuple::parse(p, text)
        })
        .collect()
}

pub fn tuples_to_json(p: u64, tuples: &[TorsionTuple]) -> Value {
    json!({
        "p": p,
        "tuples": tuples.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
    })
}

pub fn exponent_to_json(spec: &ExponentSpec) -> Value {
    match spec {
        ExponentSpec::Integer(m) => json!({ "value": m.to_string() }),
        ExponentSpec::Residue(r) => json!({
            "value": r.to_decimal(),
            "modulus_exp": r.precision(),
        }),
    }
}

pub fn exponent_from_json(p: u64, value: &Value) -> Result<ExponentSpec> {
    let text = str_field(value, "value")?;
    match value.get("modulus_exp") {
        None | Some(Value::Null) => {
            let m = i64::from_str(text.trim())
                .map_err(|_| Error::InvalidInput(format!("bad integer exponent {:?}", text)))?;
            Ok(ExponentSpec::Integer(m))
        }
        Some(k) => {
            let k = k
                .as_u64()
                .ok_or_else(|| Error::InvalidInput("\"modulus_exp\" is not an integer".into()))?
                as u32;
            Ok(ExponentSpec::Residue(PadicApprox::new(p, k, parse_biguint(text)?)))
        }
    }
}

pub fn witness_to_json(w: &SpecialWitness) -> Value {
    json!({
        "kind": w.kind.as_str(),
        "exponents": w.exponents.iter().map(exponent_to_json).collect::<Vec<_>>(),
        "translate": w.translate.to_string(),
        "modulus_exp": w.modulus_exp,
        "residual_floor": valuation_to_json(&w.residual_floor),
        "partial": w.partial,
    })
}

pub fn axiom_report_to_json(group: &LtGroup, trials: u32, seed: u64, report: &AxiomReport) -> Value {
    json!({
        "p": group.prime(),
        "group": group.kind().name(),
        "precision": group.precision(),
        "degree_bound": group.degree_bound(),
        "trials": trials,
        "seed": seed,
        "all_passed": report.all_passed(),
        "axioms": report.axioms.iter().map(|a| json!({
            "name": a.name,
            "trials": a.trials,
            "failures": a.failures,
            "passed": a.failures == 0,
        })).collect::<Vec<_>>(),
    })
}

pub fn scan_report_to_json(report: &ScanReport) -> Value {
    let records: Vec<Value> = report
        .records
        .iter()
        .map(|r| {
            json!({
                "tuple": r.tuple.to_string(),
                "level": r.tuple.level(),
                "valuations": r.valuations.iter().map(valuation_to_json).collect::<Vec<_>>(),
                "min_valuation": valuation_to_json(&r.min_valuation),
                "membership": r.membership.as_str(),
                "zero_at_precision": r.zero_at_precision,
            })
        })
        .collect();
    let profile: Vec<Value> = report
        .profile
        .iter()
        .map(|row| {
            json!({
                "level": row.level,
                "tuples": row.tuples,
                "zeros": row.zeros,
                "undecided": row.undecided,
                "max_min_valuation": row.max_min_valuation.map(rat_string),
                "witness": row.witness.as_ref().map(|t| t.to_string()),
            })
        })
        .collect();
    json!({
        "p": report.prime,
        "group": report.group_kind,
        "epsilon": rat_string(report.epsilon),
        "level_bound": report.level_bound,
        "vars": report.nvars,
        "members": report.members,
        "outside": report.outside,
        "undecided": report.undecided,
        "zeros": report.zeros,
        "profile": profile,
        "records": records,
    })
}

/// The profile-only slice of a scan report.
pub fn profile_to_json(report: &ScanReport) -> Value {
    let mut value = scan_report_to_json(report);
    value.as_object_mut().unwrap().remove("records");
    value
}

pub fn detection_to_json(det: &Detection) -> Value {
    json!({
        "witness": det.witness.as_ref().map(witness_to_json),
        "diagnostic": det.diagnostic,
        "zero_counts": det.zero_counts.iter().map(|&(k, c)| json!({
            "level": k,
            "zeros_at_or_below": c,
        })).collect::<Vec<_>>(),
    })
}

pub fn translate_check_to_json(check: &TranslateCheck) -> Value {
    json!({
        "verified": check.verified,
        "floor": valuation_to_json(&check.floor),
        "modulus_exp": check.modulus_exp,
        "coefficients": check.coefficients.iter().map(|c| json!({
            "degree": c.degree,
            "required": rat_string(c.required),
            "valuation": valuation_to_json(&c.valuation),
            "ok": c.ok,
        })).collect::<Vec<_>>(),
    })
}

pub fn dichotomy_to_json(report: &DichotomyReport) -> Value {
    let mut obj = Map::new();
    obj.insert("outcome".into(), json!(report.outcome_name()));
    obj.insert("level_bound".into(), json!(report.level_bound));
    obj.insert("tuples_scanned".into(), json!(report.tuples_scanned));
    obj.insert("undecided".into(), json!(report.undecided));
    obj.insert(
        "zero_counts".into(),
        json!(report
            .zero_counts
            .iter()
            .map(|&(k, c)| json!({ "level": k, "zeros_at_or_below": c }))
            .collect::<Vec<_>>()),
    );
    match &report.outcome {
        DichotomyOutcome::SpecialFound(w) => {
            obj.insert("witness".into(), witness_to_json(w));
        }
        DichotomyOutcome::BoundedBelow { threshold, exceptions } => {
            obj.insert("threshold".into(), json!(rat_string(*threshold)));
            obj.insert(
                "exceptions".into(),
                json!(exceptions.iter().map(|t| t.to_string()).collect::<Vec<_>>()),
            );
        }
    }
    Value::Object(obj)
}

/// Canonical textual form: pretty-printed with sorted keys and a final
/// newline, so identical values yield identical bytes.
pub fn to_canonical_string(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable value");
    s.push('\n');
    s
}

pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(Error::from)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::rat;
    use crate::series::binomial_series_int;

    #[test]
    fn series_json_round_trips_bit_exactly() {
        let s = binomial_series_int(3, 12, 13, 6); // truncated: 13 > 6
        let encoded = series_to_json(&s);
        let back = series_from_json(&encoded).unwrap();
        assert!(back.is_truncated());
        assert_eq!(to_canonical_string(&encoded), to_canonical_string(&series_to_json(&back)));
        for (exp, coeff) in s.terms() {
            assert_eq!(&back.coeff(exp), coeff);
        }
    }

    #[test]
    fn canonical_output_is_deterministic() {
        let s = binomial_series_int(3, 10, 4, 8);
        let a = to_canonical_string(&series_to_json(&s));
        let b = to_canonical_string(&series_to_json(&s));
        assert_eq!(a, b);
        assert!(a.ends_with('\n'));
        assert!(!a.contains("e-") && !a.contains('E'), "no float notation");
    }

    #[test]
    fn rational_strings_parse_back() {
        assert_eq!(parse_rat("1/2").unwrap(), rat(1, 2));
        assert_eq!(parse_rat("10").unwrap(), rat(10, 1));
        assert_eq!(rat_string(rat(5, 6)), "5/6");
        assert!(parse_rat("1/0").is_err());
    }

    #[test]
    fn cv_json_round_trips() {
        let cv = ChangeOfVariables::identity(3, 3, 6)
            .with_permutation(vec![2, 0, 1])
            .unwrap()
            .with_entry(2, 0, PadicApprox::from_i64(3, 6, -3))
            .unwrap();
        let back = cv_from_json(&cv_to_json(&cv)).unwrap();
        assert_eq!(back.perm(), cv.perm());
        assert_eq!(back.entry(2, 0), cv.entry(2, 0));
        assert_eq!(
            to_canonical_string(&cv_to_json(&back)),
            to_canonical_string(&cv_to_json(&cv))
        );
    }

    #[test]
    fn exponent_json_distinguishes_exact_and_residue() {
        let exact = ExponentSpec::Integer(-1);
        let residue = ExponentSpec::Residue(PadicApprox::from_u64(3, 3, 5));
        let e = exponent_to_json(&exact);
        assert!(e.get("modulus_exp").is_none());
        let r = exponent_to_json(&residue);
        assert_eq!(r["modulus_exp"], json!(3));
        assert_eq!(r["value"], json!("5"));
        assert_eq!(exponent_from_json(3, &e).unwrap(), exact);
        assert_eq!(exponent_from_json(3, &r).unwrap(), residue);
    }

    #[test]
    fn tuples_json_round_trips() {
        let doc = json!({ "p": 3, "tuples": ["2:4,1:1", "0:0,1:2"] });
        let tuples = tuples_from_json(&doc).unwrap();
        assert_eq!(tuples_to_json(3, &tuples), doc);
    }
}
