//! JSON forms of cut systems, strength reports, certificates and widths.

use latcut_cuts::CutSystem;
use latcut_geometry::io::{from_json, rat_str, unwrap_vec, vec_strs, JRat, Lax, ParseError, Strict, Strictness};
use latcut_geometry::rat::{fmt_float, parse_rat, Rat, RatVec};
use latcut_lattice::{LatticeFreeCert, LatticeStatus, Maximality, Width, WidthResult};
use latcut_strength::{StrengthReport, StrengthValue, StrengthWitness};
use num_traits::{Signed, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize};
use serde_json::{json, Value};
use std::fmt;
use std::marker::PhantomData;

pub use latcut_geometry::io::{emit_polyhedron, parse_point, parse_polyhedron, poly_out};

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn semantic(src: &str, key: &str, message: impl Into<String>) -> ParseError {
    ParseError { offset: src.find(key).unwrap_or(0), message: message.into() }
}

/// A float rounded to 12 significant digits, for display fields.
pub fn display_float(x: f64) -> Value {
    fmt_float(x).parse::<f64>().map(Value::from).unwrap_or(Value::Null)
}

pub fn strength_str(v: &StrengthValue) -> String {
    match v {
        StrengthValue::Zero => "0".into(),
        StrengthValue::Finite(x) => rat_str(x),
        StrengthValue::Infinite => "inf".into(),
    }
}

struct JStrength<S>(StrengthValue, PhantomData<S>);

impl<'de, S: Strictness> Deserialize<'de> for JStrength<S> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V<S>(PhantomData<S>);
        impl<S: Strictness> Visitor<'_> for V<S> {
            type Value = JStrength<S>;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("\"inf\", \"0\" or a positive rational string")
            }
            fn visit_str<E: de::Error>(self, s: &str) -> Result<Self::Value, E> {
                if s == "inf" {
                    return Ok(JStrength(StrengthValue::Infinite, PhantomData));
                }
                let r = parse_rat(s, S::STRICT).map_err(E::custom)?;
                if r.is_negative() {
                    return Err(E::custom("strength values are nonnegative"));
                }
                let v = if r.is_zero() { StrengthValue::Zero } else { StrengthValue::Finite(r) };
                Ok(JStrength(v, PhantomData))
            }
        }
        d.deserialize_str(V(PhantomData))
    }
}

#[derive(Serialize)]
struct WitnessOut {
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    point: Option<Vec<String>>,
}

#[derive(Serialize)]
struct StrengthOut {
    value: String,
    witness: WitnessOut,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields, bound = "S: Strictness")]
struct WitnessIn<S: Strictness> {
    kind: String,
    point: Option<Vec<JRat<S>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields, bound = "S: Strictness")]
struct StrengthIn<S: Strictness> {
    value: JStrength<S>,
    witness: WitnessIn<S>,
}

fn strength_out(r: &StrengthReport) -> StrengthOut {
    let (kind, point) = match &r.witness {
        StrengthWitness::None => ("none", None),
        StrengthWitness::Vertex(v) => ("vertex", Some(vec_strs(v))),
        StrengthWitness::Ray(v) => ("ray", Some(vec_strs(v))),
        StrengthWitness::FNotInterior => ("f_not_interior", None),
    };
    StrengthOut { value: strength_str(&r.value), witness: WitnessOut { kind, point } }
}

pub fn strength_json(r: &StrengthReport) -> Value {
    serde_json::to_value(strength_out(r)).expect("serializable")
}

pub fn emit_strength(r: &StrengthReport) -> String {
    pretty(&strength_out(r))
}

fn build_strength<S: Strictness>(src: &str, raw: StrengthIn<S>) -> Result<StrengthReport, ParseError> {
    let point = raw.witness.point.map(unwrap_vec);
    let witness = match (raw.witness.kind.as_str(), point) {
        ("none", None) => StrengthWitness::None,
        ("vertex", Some(p)) => StrengthWitness::Vertex(p),
        ("ray", Some(p)) => StrengthWitness::Ray(p),
        ("f_not_interior", None) => StrengthWitness::FNotInterior,
        (k, _) => return Err(semantic(src, "\"kind\"", format!("witness kind {k:?} with mismatched point field"))),
    };
    Ok(StrengthReport { value: raw.value.0, witness })
}

pub fn parse_strength(src: &str, strict: bool) -> Result<StrengthReport, ParseError> {
    if strict {
        build_strength(src, from_json::<StrengthIn<Strict>>(src)?)
    } else {
        build_strength(src, from_json::<StrengthIn<Lax>>(src)?)
    }
}

#[derive(Serialize)]
struct CutOut {
    f: Vec<String>,
    columns: Vec<Vec<String>>,
    coeffs: Vec<String>,
    trivial: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields, bound = "S: Strictness")]
struct CutIn<S: Strictness> {
    f: Vec<JRat<S>>,
    columns: Vec<Vec<JRat<S>>>,
    coeffs: Vec<JRat<S>>,
    trivial: bool,
}

fn cut_out(c: &CutSystem) -> CutOut {
    CutOut {
        f: vec_strs(&c.f),
        columns: c.columns.iter().map(|r| vec_strs(r)).collect(),
        coeffs: vec_strs(&c.coeffs),
        trivial: c.trivial,
    }
}

pub fn cut_json(c: &CutSystem) -> Value {
    serde_json::to_value(cut_out(c)).expect("serializable")
}

pub fn emit_cut(c: &CutSystem) -> String {
    pretty(&cut_out(c))
}

fn build_cut<S: Strictness>(src: &str, raw: CutIn<S>) -> Result<CutSystem, ParseError> {
    let f = unwrap_vec(raw.f);
    let columns: Vec<RatVec> = raw.columns.into_iter().map(unwrap_vec).collect();
    let coeffs = unwrap_vec(raw.coeffs);
    if columns.len() != coeffs.len() {
        return Err(semantic(src, "\"coeffs\"", "one coefficient per column is required"));
    }
    if columns.iter().any(|r| r.len() != f.len()) {
        return Err(semantic(src, "\"columns\"", "columns must have the dimension of f"));
    }
    if coeffs.iter().any(Rat::is_negative) {
        return Err(semantic(src, "\"coeffs\"", "coefficients are nonnegative"));
    }
    Ok(CutSystem { f, columns, coeffs, trivial: raw.trivial })
}

pub fn parse_cut(src: &str, strict: bool) -> Result<CutSystem, ParseError> {
    if strict {
        build_cut(src, from_json::<CutIn<Strict>>(src)?)
    } else {
        build_cut(src, from_json::<CutIn<Lax>>(src)?)
    }
}

/// A list of rational vectors such as `[["1","0"],["0","1"]]`.
pub fn parse_columns(src: &str, strict: bool) -> Result<Vec<RatVec>, ParseError> {
    let raw = if strict {
        from_json::<Vec<Vec<JRat<Strict>>>>(src)?.into_iter().map(unwrap_vec).collect()
    } else {
        from_json::<Vec<Vec<JRat<Lax>>>>(src)?.into_iter().map(unwrap_vec).collect()
    };
    Ok(raw)
}

pub fn cert_json(c: &LatticeFreeCert) -> Value {
    let status = match &c.status {
        LatticeStatus::LatticeFree => json!({ "lattice_free": true }),
        LatticeStatus::NotLatticeFree { witness } => json!({ "lattice_free": false, "witness": vec_strs(witness) }),
    };
    let maximal = match &c.maximal {
        Maximality::Yes { facet_witnesses } => {
            json!({ "maximal": "yes", "facet_witnesses": facet_witnesses.iter().map(|z| vec_strs(z)).collect::<Vec<_>>() })
        }
        Maximality::No { facet, reason } => json!({ "maximal": "no", "facet": facet, "reason": reason }),
        Maximality::Unknown => json!({ "maximal": "unknown" }),
    };
    let mut out = status;
    out.as_object_mut().expect("object").extend(maximal.as_object().expect("object").clone());
    out
}

pub fn width_str(w: &Width) -> String {
    match w {
        Width::Finite(x) => rat_str(x),
        Width::Infinite => "inf".into(),
    }
}

pub fn width_json(w: &WidthResult) -> Value {
    json!({
        "direction": vec_strs(&w.direction),
        "width": width_str(&w.width),
        "certified": w.is_certified_min,
        "enum_bound": w.enum_bound,
    })
}

pub fn rat_json(x: &Rat) -> Value {
    Value::String(rat_str(x))
}

pub fn vec_json(v: &[Rat]) -> Value {
    json!(vec_strs(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use latcut_geometry::rat::{frac, fvec, ivec};

    #[test]
    fn strength_roundtrip() {
        for r in [
            StrengthReport { value: StrengthValue::Finite(frac(3, 2)), witness: StrengthWitness::Vertex(fvec(&[(1, 2), (0, 1)])) },
            StrengthReport { value: StrengthValue::Infinite, witness: StrengthWitness::Ray(ivec(&[0, 1])) },
            StrengthReport { value: StrengthValue::Zero, witness: StrengthWitness::None },
            StrengthReport { value: StrengthValue::Infinite, witness: StrengthWitness::FNotInterior },
        ] {
            let text = emit_strength(&r);
            assert_eq!(parse_strength(&text, true).unwrap(), r);
        }
    }

    #[test]
    fn strength_rejects_bad_values() {
        assert!(parse_strength(r#"{"value":"-1","witness":{"kind":"none"}}"#, false).is_err());
        assert!(parse_strength(r#"{"value":"1/0","witness":{"kind":"none"}}"#, false).is_err());
        assert!(parse_strength(r#"{"value":1.5,"witness":{"kind":"none"}}"#, false).is_err());
        assert!(parse_strength(r#"{"value":"2","witness":{"kind":"vertex"}}"#, false).is_err());
        assert!(parse_strength(r#"{"value":"4/2","witness":{"kind":"none"}}"#, true).is_err());
    }

    #[test]
    fn cut_roundtrip_and_validation() {
        let c = CutSystem { f: fvec(&[(1, 2), (1, 2)]), columns: vec![ivec(&[1, 0]), ivec(&[0, 1])], coeffs: vec![frac(2, 1), Rat::zero()], trivial: false };
        let text = emit_cut(&c);
        assert_eq!(parse_cut(&text, true).unwrap(), c);
        let bad = r#"{"f":["1/2"],"columns":[["1"]],"coeffs":[],"trivial":false}"#;
        let e = parse_cut(bad, false).unwrap_err();
        assert_eq!(e.offset, bad.find("\"coeffs\"").unwrap());
    }

    #[test]
    fn float_display_has_twelve_digits() {
        assert_eq!(display_float(2f64.sqrt() * 1e3), json!(1414.21356237));
    }
}
