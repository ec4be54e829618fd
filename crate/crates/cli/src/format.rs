//! JSON forms of polynomials, manifolds and basic-class results.
//!
//! Objects are built as `serde_json::Value`, whose maps keep keys sorted,
//! so identical inputs serialize to identical bytes.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use knotsurgery_core::basicclass::{BasicClassResult, Verdict};
use knotsurgery_core::laurent::LaurentPoly;
use knotsurgery_core::manifold::{geography, FourManifold, SurfaceClass};

use crate::error::{json_error, Error};

/// Integers that fit in `i64` become JSON numbers, larger ones strings.
pub fn bigint(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(i) => json!(i),
        Err(_) => json!(v.to_string()),
    }
}

fn parse_bigint(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

/// `{"var": label, "terms": [[exp, coeff], ...]}`, exponents descending.
pub fn laurent_to_json(p: &LaurentPoly) -> Value {
    let terms: Vec<Value> = p.terms().map(|(e, c)| json!([e, bigint(c)])).collect();
    json!({ "var": p.var(), "terms": terms })
}

pub fn laurent_from_json(v: &Value) -> Result<LaurentPoly, Error> {
    let bad = |m: &str| Error::Input(format!("Laurent JSON: {m}"));
    let var = v.get("var").and_then(Value::as_str).ok_or_else(|| bad("missing `var`"))?;
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing `terms`"))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let pair = t.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad("term is not [exp, coeff]"))?;
        let e = pair[0].as_i64().ok_or_else(|| bad("exponent is not an integer"))?;
        let c = parse_bigint(&pair[1]).ok_or_else(|| bad("coefficient is not an integer"))?;
        out.push((e, c));
    }
    Ok(LaurentPoly::from_terms(var, out))
}

pub fn laurent_from_json_str(text: &str) -> Result<LaurentPoly, Error> {
    laurent_from_json(&serde_json::from_str(text).map_err(json_error)?)
}

fn surface_json(s: &SurfaceClass) -> Value {
    let pairings: Map<String, Value> = s.pairings.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
    json!({
        "label": s.label,
        "genus": s.genus,
        "self_int": s.self_int,
        "pairings": pairings,
    })
}

/// `{name, e, sign, b_plus, b1, spin, simply_connected, chi, c, sw,
/// surfaces, assumptions}`. `chi` is null unless simply connected.
pub fn manifold_report(m: &FourManifold) -> Value {
    let chi = geography(m).ok().map(|p| p.chi);
    let sw = m.sw.as_ref().map(|s| {
        let mut v = laurent_to_json(&s.poly);
        v["variable"] = json!(s.variable.label());
        v
    });
    let assumptions: Vec<Value> =
        m.assumptions.iter().map(|a| json!({ "fact": a.fact, "citation": a.citation })).collect();
    json!({
        "name": m.name,
        "e": m.euler,
        "sign": m.signature,
        "b_plus": m.b_plus,
        "b1": m.b1,
        "spin": m.spin,
        "simply_connected": m.simply_connected,
        "chi": chi,
        "c": m.c_invariant(),
        "sw": sw,
        "surfaces": m.surfaces.iter().map(surface_json).collect::<Vec<_>>(),
        "assumptions": assumptions,
    })
}

/// `{g, classes: [{a, b, sw_magnitude, sign_ambiguous}], simple_type,
/// count_up_to_sign, verdict, citations, notes}`.
pub fn result_report(r: &BasicClassResult, verdict: Verdict, extra_citations: &[&str]) -> Value {
    let classes: Vec<Value> = r
        .classes
        .iter()
        .map(|c| {
            json!({
                "a": c.class.a,
                "b": c.class.b,
                "sw_magnitude": bigint(&BigInt::from(c.sw.magnitude().clone())),
                "sign_ambiguous": c.sign_ambiguous,
            })
        })
        .collect();
    let mut citations: Vec<String> = r.citations.clone();
    citations.extend(extra_citations.iter().map(|s| s.to_string()));
    json!({
        "g": r.knot_genus,
        "classes": classes,
        "simple_type": r.simple_type,
        "count_up_to_sign": r.count_up_to_sign,
        "verdict": verdict.as_str(),
        "citations": citations,
        "notes": r.notes,
    })
}
