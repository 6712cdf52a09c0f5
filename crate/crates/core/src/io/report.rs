//! The versioned JSON report document. Exact values are always strings;
//! JSON numbers appear only as non-negative integer indices and bounds.

use serde_json::{json, Map, Value};

pub const SCHEMA: &str = "moment-forge/1";

/// `{"schema": "moment-forge/1", "command": …, "result": …}`
pub fn document(command: Value, result: Value) -> Value {
    json!({
        "schema": SCHEMA,
        "command": command,
        "result": result,
    })
}

/// Checks a report against the schema: the version tag, an object-valued
/// `command` with a string `subcommand`, an object-valued `result`, and no
/// non-integer JSON numbers anywhere.
pub fn validate(doc: &Value) -> Result<(), String> {
    let obj = doc.as_object().ok_or("report is not a JSON object")?;
    match obj.get("schema") {
        Some(Value::String(s)) if s == SCHEMA => {}
        other => return Err(format!("bad schema tag: {other:?}")),
    }
    let command = obj
        .get("command")
        .and_then(Value::as_object)
        .ok_or("missing command object")?;
    if !matches!(command.get("subcommand"), Some(Value::String(_))) {
        return Err("command.subcommand must be a string".into());
    }
    obj.get("result")
        .and_then(Value::as_object)
        .ok_or("missing result object")?;
    let extra: Vec<&String> = obj
        .keys()
        .filter(|k| !["schema", "command", "result"].contains(&k.as_str()))
        .collect();
    if !extra.is_empty() {
        return Err(format!("unexpected top-level keys {extra:?}"));
    }
    check_numbers(doc, "$")
}

fn check_numbers(v: &Value, path: &str) -> Result<(), String> {
    match v {
        Value::Number(n) if !n.is_u64() => {
            Err(format!("{path}: numeric value {n} must be an exact string"))
        }
        Value::Array(items) => items
            .iter()
            .enumerate()
            .try_for_each(|(k, x)| check_numbers(x, &format!("{path}[{k}]"))),
        Value::Object(map) => map
            .iter()
            .try_for_each(|(k, x)| check_numbers(x, &format!("{path}.{k}"))),
        _ => Ok(()),
    }
}

/// Convenience for building `command` echoes from ordered key/value pairs.
pub fn object<I, K>(pairs: I) -> Value
where
    I: IntoIterator<Item = (K, Value)>,
    K: Into<String>,
{
    Value::Object(
        pairs
            .into_iter()
            .map(|(k, v)| (k.into(), v))
            .collect::<Map<_, _>>(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_well_formed_documents() {
        let d = document(
            json!({"subcommand": "cert", "p": 5}),
            json!({"value": "-544", "values": ["1/2", "3*i"]}),
        );
        validate(&d).unwrap();
    }

    #[test]
    fn rejects_floats_and_bad_tags() {
        let d = document(json!({"subcommand": "x"}), json!({"value": 0.5}));
        assert!(validate(&d).unwrap_err().contains("$.result.value"));
        let d = document(json!({"subcommand": "x"}), json!({"value": -3}));
        assert!(validate(&d).is_err());
        let mut d = document(json!({"subcommand": "x"}), json!({}));
        d["schema"] = json!("moment-forge/0");
        assert!(validate(&d).is_err());
        assert!(validate(&json!([])).is_err());
    }
}
