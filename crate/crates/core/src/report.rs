//! Canonical JSON output: sorted keys, floats rounded to six decimals.

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u64 = 1;

/// Rounds every float in `value` to six decimals. Keys are already sorted
/// because `serde_json::Map` is a `BTreeMap` without `preserve_order`.
pub fn canonicalize(value: Value) -> Value {
    match value {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().unwrap();
            let r = (x * 1e6).round() / 1e6;
            serde_json::Number::from_f64(r).map(Value::Number).unwrap_or(Value::Null)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(canonicalize).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, canonicalize(v))).collect()),
        other => other,
    }
}

/// Serializes `body` with a `"schema"` field added at the top level.
pub fn to_canonical_json<T: Serialize>(body: &T) -> String {
    let mut value = serde_json::to_value(body).expect("report types serialize");
    if let Value::Object(map) = &mut value {
        map.insert("schema".into(), Value::from(SCHEMA_VERSION));
    }
    serde_json::to_string_pretty(&canonicalize(value)).unwrap()
}
