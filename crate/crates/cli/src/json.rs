//! JSON renderings of the core types.
//!
//! Big integers are written as decimal strings inside series, since they
//! outgrow every native width quickly. Multiplicities are plain JSON numbers
//! when they fit in an `i64` and strings otherwise. `serde_json::Map` keeps
//! keys sorted, so output is byte-for-byte deterministic.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use qdiscover::{ProductForm, QSeries, ResiduePattern, ZPolynomial};
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError(pub String);

impl std::fmt::Display for FormatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "malformed input: {}", self.0)
    }
}

impl std::error::Error for FormatError {}

fn bad(msg: impl Into<String>) -> FormatError {
    FormatError(msg.into())
}

/// `{"order": N, "coeffs": ["a0", ..., "aN"]}`
pub fn qseries_to_json(s: &QSeries) -> Value {
    json!({
        "order": s.order(),
        "coeffs": s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    })
}

pub fn qseries_from_json(v: &Value) -> Result<QSeries, FormatError> {
    let coeffs = v
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("series needs a \"coeffs\" array"))?
        .iter()
        .map(parse_bigint)
        .collect::<Result<Vec<_>, _>>()?;
    let s = QSeries::from_coeffs(coeffs).map_err(|e| bad(e.to_string()))?;
    if let Some(order) = v.get("order") {
        if order.as_u64() != Some(s.order() as u64) {
            return Err(bad("\"order\" disagrees with the number of coefficients"));
        }
    }
    Ok(s)
}

/// List of series, indexed by `z`-degree.
pub fn zpoly_to_json(p: &ZPolynomial) -> Value {
    Value::Array(p.zcoeffs().iter().map(qseries_to_json).collect())
}

fn multiplicity_to_json(m: &BigInt) -> Value {
    match m.to_i64() {
        Some(small) => json!(small),
        None => json!(m.to_string()),
    }
}

fn parse_bigint(v: &Value) -> Result<BigInt, FormatError> {
    match v {
        Value::String(s) => s.parse().map_err(|_| bad(format!("not an integer: {s:?}"))),
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| bad(format!("not an integer: {n}"))),
        other => Err(bad(format!("expected an integer, found {other}"))),
    }
}

/// `{"factors": [{"e": 1, "m": -1}, ...]}`, ascending in `e`.
pub fn product_form_to_json(pf: &ProductForm) -> Value {
    let factors: Vec<Value> = pf
        .factors()
        .iter()
        .map(|(e, m)| json!({ "e": e, "m": multiplicity_to_json(m) }))
        .collect();
    json!({ "factors": factors })
}

pub fn product_form_from_json(v: &Value) -> Result<ProductForm, FormatError> {
    let entries = v
        .get("factors")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("product needs a \"factors\" array"))?;
    let mut pf = ProductForm::new();
    for entry in entries {
        let e = entry
            .get("e")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("factor needs a positive integer \"e\""))?;
        let m = parse_bigint(entry.get("m").ok_or_else(|| bad("factor needs \"m\""))?)?;
        pf.insert(e as usize, m)
            .map_err(|err| bad(err.to_string()))?;
    }
    Ok(pf)
}

/// `{"modulus": 5, "residues": [1, 4], "multiplicity": -1}`
pub fn pattern_to_json(p: &ResiduePattern) -> Value {
    json!({
        "modulus": p.modulus(),
        "residues": p.residues().iter().collect::<Vec<_>>(),
        "multiplicity": multiplicity_to_json(p.multiplicity()),
    })
}
