//! Plain-text rendering of the JSON results.

use std::fmt::Write;

use serde_json::Value;

pub fn text(value: &Value) -> String {
    let mut out = String::new();
    block(&mut out, value, 0);
    out
}

fn block(out: &mut String, value: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (key, v) in map {
                if is_inline(v) {
                    let _ = writeln!(out, "{pad}{key}: {}", inline(v));
                } else if let Some(rows) = matrix(v) {
                    let _ = writeln!(out, "{pad}{key}:");
                    table(out, &rows, indent + 1);
                } else {
                    let _ = writeln!(out, "{pad}{key}:");
                    block(out, v, indent + 1);
                }
            }
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                if is_inline(item) {
                    let _ = writeln!(out, "{pad}- {}", inline(item));
                } else {
                    let _ = writeln!(out, "{pad}[{i}]");
                    block(out, item, indent + 1);
                }
            }
        }
        v => {
            let _ = writeln!(out, "{pad}{}", inline(v));
        }
    }
}

/// Scalars, arrays of scalars, and small flat objects fit on one line.
fn is_inline(value: &Value) -> bool {
    match value {
        Value::Array(items) => items.iter().all(is_scalar),
        Value::Object(map) => map.len() <= 4 && map.values().all(is_scalar),
        _ => true,
    }
}

fn is_scalar(value: &Value) -> bool {
    !matches!(value, Value::Array(_) | Value::Object(_))
}

fn inline(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(inline).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Object(map) => {
            let parts: Vec<String> = map.iter().map(|(k, v)| format!("{k}: {}", inline(v))).collect();
            format!("{{{}}}", parts.join(", "))
        }
        v => v.to_string(),
    }
}

/// A non-empty array of equally long integer rows.
fn matrix(value: &Value) -> Option<Vec<Vec<i64>>> {
    let rows = value.as_array()?;
    let parsed: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.as_array()?.iter().map(Value::as_i64).collect::<Option<Vec<_>>>())
        .collect::<Option<_>>()?;
    let width = parsed.first()?.len();
    parsed.iter().all(|r| r.len() == width).then_some(parsed)
}

fn table(out: &mut String, rows: &[Vec<i64>], indent: usize) {
    let pad = "  ".repeat(indent);
    let width = rows.iter().flatten().map(|v| v.to_string().len()).max().unwrap_or(1);
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        let _ = writeln!(out, "{pad}{}", cells.join(" "));
    }
}
