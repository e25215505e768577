//! JSON report assembly. Every numeric field is an exact integer; values
//! above 2⁵³ in magnitude are emitted as decimal strings so no consumer can
//! lose precision.

use diamondlab_core::{Certificate, Fingerprint, SearchOutcome, Tournament};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

const SAFE_MAX: i64 = 1 << 53;

/// Exact integer encoding: JSON number while `|v| <= 2^53`, string beyond.
pub fn exact_int(v: &BigInt) -> Value {
    match i64::try_from(v.clone()) {
        Ok(small) if small.abs() <= SAFE_MAX => json!(small),
        _ => json!(v.to_string()),
    }
}

pub fn exact_ints(vs: &[BigInt]) -> Value {
    Value::Array(vs.iter().map(exact_int).collect())
}

/// Wraps a payload in the versioned report envelope. `inputs` names the
/// files and arguments the command consumed ("<stdin>" for piped data).
pub fn envelope(command: &str, inputs: &[String], elapsed_ms: u64, payload: Map<String, Value>) -> Value {
    let mut m = Map::new();
    m.insert("schema_version".into(), json!(SCHEMA_VERSION));
    m.insert(
        "library_version".into(),
        json!(env!("CARGO_PKG_VERSION")),
    );
    m.insert("command".into(), json!(command));
    m.insert("inputs".into(), json!(inputs));
    m.insert("elapsed_ms".into(), json!(elapsed_ms));
    m.extend(payload);
    Value::Object(m)
}

/// 0-indexed vertex list to the 1-indexed human-facing form.
pub fn one_indexed(vs: &[usize]) -> Value {
    Value::Array(vs.iter().map(|&v| json!(v + 1)).collect())
}

pub fn fingerprint_json(f: &Fingerprint) -> Value {
    json!({
        "charpoly": exact_ints(&f.charpoly),
        "abs_m_multiset": f.abs_m_multiset,
        "delta": f.delta,
    })
}

pub fn certificate_json(c: &Certificate, verified: bool) -> Value {
    json!({
        "kind": serde_json::to_value(c.kind).unwrap(),
        "delta": c.delta,
        "bound_value": c.bound_value,
        "diagonal": c.diagonal,
        "partition": c.partition.as_ref().map(|p| {
            json!([one_indexed(&p[0]), one_indexed(&p[1])])
        }),
        "verified": verified,
    })
}

pub fn tournament_text(t: &Tournament) -> Value {
    json!(t.to_text())
}

pub fn search_outcome_json(o: &SearchOutcome, checkpoint: Option<&std::path::Path>) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("n".into(), json!(o.n));
    m.insert("max_delta".into(), json!(o.max_delta));
    m.insert("enumerated".into(), json!(o.enumerated));
    m.insert("maximizer_count".into(), json!(o.maximizer_count));
    m.insert("truncated".into(), json!(o.truncated));
    m.insert(
        "fingerprints".into(),
        Value::Array(o.fingerprints.iter().map(fingerprint_json).collect()),
    );
    m.insert(
        "representatives".into(),
        Value::Array(o.representatives.iter().map(tournament_text).collect()),
    );
    m.insert("iso_classes".into(), json!(o.iso_classes));
    m.insert(
        "class_representatives".into(),
        match &o.class_representatives {
            Some(reps) => Value::Array(reps.iter().map(tournament_text).collect()),
            None => Value::Null,
        },
    );
    m.insert("search_elapsed_ms".into(), json!(o.elapsed_ms));
    m.insert(
        "checkpoint".into(),
        match checkpoint {
            Some(p) => json!(p.display().to_string()),
            None => Value::Null,
        },
    );
    m
}

/// One expected-vs-actual row of a `reproduce` table.
pub fn row(claim: impl Into<String>, expected: impl ToString, actual: impl ToString) -> (Value, bool) {
    let pass = expected.to_string() == actual.to_string();
    (
        json!({
            "claim": claim.into(),
            "expected": expected.to_string(),
            "actual": actual.to_string(),
            "pass": pass,
        }),
        pass,
    )
}
