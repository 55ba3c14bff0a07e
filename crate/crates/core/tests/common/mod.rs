#![allow(dead_code)]

use std::process::{Command, Output};

use serde_json::Value;

pub fn closurelab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_closurelab")).args(args).output().expect("binary runs")
}

pub fn closurelab_env(args: &[&str], vars: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_closurelab"));
    cmd.args(args).env_remove("CLOSURELAB_PRIMES").env_remove("CLOSURELAB_BUDGET");
    for (k, v) in vars {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

pub fn manifest_path(name: &str) -> String {
    format!("{}/manifests/{name}", env!("CARGO_MANIFEST_DIR"))
}

pub fn schema() -> Value {
    let text = std::fs::read_to_string(format!("{}/schema/report.schema.json", env!("CARGO_MANIFEST_DIR"))).unwrap();
    serde_json::from_str(&text).unwrap()
}

fn type_ok(t: &str, v: &Value) -> bool {
    match t {
        "object" => v.is_object(),
        "array" => v.is_array(),
        "string" => v.is_string(),
        "integer" => v.is_u64() || v.is_i64(),
        "boolean" => v.is_boolean(),
        "null" => v.is_null(),
        _ => false,
    }
}

/// Validates the subset of JSON Schema used by `report.schema.json`:
/// `$ref`, `oneOf`, `enum`, `type`, `minimum`, `required`, `properties`,
/// `additionalProperties: false` and `items`.
pub fn validates(root: &Value, schema: &Value, v: &Value) -> bool {
    if let Some(r) = schema.get("$ref").and_then(Value::as_str) {
        let name = r.strip_prefix("#/$defs/").expect("local reference");
        return validates(root, &root["$defs"][name], v);
    }
    if let Some(options) = schema.get("oneOf").and_then(Value::as_array) {
        if options.iter().filter(|s| validates(root, s, v)).count() != 1 {
            return false;
        }
    }
    if let Some(allowed) = schema.get("enum").and_then(Value::as_array) {
        if !allowed.contains(v) {
            return false;
        }
    }
    match schema.get("type") {
        Some(Value::String(t)) if !type_ok(t, v) => return false,
        Some(Value::Array(ts)) if !ts.iter().any(|t| type_ok(t.as_str().unwrap(), v)) => return false,
        _ => {}
    }
    if let (Some(min), Some(x)) = (schema.get("minimum").and_then(Value::as_i64), v.as_i64()) {
        if x < min {
            return false;
        }
    }
    if let Some(obj) = v.as_object() {
        let props = schema.get("properties").and_then(Value::as_object);
        if let Some(req) = schema.get("required").and_then(Value::as_array) {
            if req.iter().any(|k| !obj.contains_key(k.as_str().unwrap())) {
                return false;
            }
        }
        if let Some(props) = props {
            for (k, x) in obj {
                match props.get(k) {
                    Some(s) => {
                        if !validates(root, s, x) {
                            return false;
                        }
                    }
                    None if schema.get("additionalProperties") == Some(&Value::Bool(false)) => return false,
                    None => {}
                }
            }
        }
    }
    if let (Some(items), Some(arr)) = (schema.get("items"), v.as_array()) {
        if !arr.iter().all(|x| validates(root, items, x)) {
            return false;
        }
    }
    true
}

/// Every stdout line parses and matches the published schema.
pub fn assert_schema_lines(stdout: &[u8]) -> Vec<Value> {
    let root = schema();
    let text = String::from_utf8(stdout.to_vec()).unwrap();
    text.lines()
        .map(|line| {
            let v: Value = serde_json::from_str(line).unwrap_or_else(|e| panic!("{e}: {line}"));
            assert!(validates(&root, &root, &v), "schema violation: {line}");
            v
        })
        .collect()
}

/// Drops the timing field from every record.
pub fn without_timing(values: &[Value]) -> Vec<Value> {
    values
        .iter()
        .cloned()
        .map(|mut v| {
            if let Some(o) = v.as_object_mut() {
                o.remove("ms");
            }
            v
        })
        .collect()
}
