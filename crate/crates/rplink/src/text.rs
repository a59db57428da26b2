//! Line-oriented rendering of a JSON report.
//!
//! Every leaf becomes one `path: value` line, where nested fields are joined
//! with `.` and array elements are indexed as `[k]`. Strings are written
//! raw, `null` as `none`. A string containing newlines is written as
//! `path: |` followed by its lines, each indented by two spaces.

use serde_json::Value;

pub fn render(v: &Value) -> String {
    let mut out = String::new();
    walk(&mut out, "", v);
    out
}

fn walk(out: &mut String, path: &str, v: &Value) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let p = if path.is_empty() { k.clone() } else { format!("{path}.{k}") };
                walk(out, &p, x);
            }
        }
        Value::Array(items) if !items.is_empty() => {
            for (k, x) in items.iter().enumerate() {
                walk(out, &format!("{path}[{k}]"), x);
            }
        }
        Value::Array(_) => out.push_str(&format!("{path}: []\n")),
        Value::String(s) if s.contains('\n') => {
            out.push_str(&format!("{path}: |\n"));
            for line in s.lines() {
                out.push_str(&format!("  {line}\n"));
            }
        }
        Value::String(s) => out.push_str(&format!("{path}: {s}\n")),
        Value::Null => out.push_str(&format!("{path}: none\n")),
        other => out.push_str(&format!("{path}: {other}\n")),
    }
}
