use serde_json::{json, Map, Value};

use crate::commands::Outcome;

const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Pretty JSON envelope. Object keys come out sorted, so identical inputs give
/// identical bytes.
pub fn json(outcome: &Outcome) -> String {
    let envelope = json!({
        "command": outcome.command,
        "inputs": outcome.inputs,
        "result": outcome.result,
        "version": VERSION,
    });
    let mut s = serde_json::to_string_pretty(&envelope).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

/// Arrays of flat objects sharing the first row's keys render as tables.
fn as_table(rows: &[Value]) -> Option<Vec<String>> {
    let first = rows.first()?.as_object()?;
    // index columns first, the rest in key order
    let mut keys: Vec<&String> = first.keys().collect();
    keys.sort_by_key(|k| !matches!(k.as_str(), "n" | "k"));
    let mut cells: Vec<Vec<String>> = vec![keys.iter().map(|k| k.to_string()).collect()];
    for row in rows {
        let obj = row.as_object()?;
        if obj.len() != keys.len() || obj.values().any(|v| v.is_object() || v.is_array()) {
            return None;
        }
        cells.push(
            keys.iter()
                .map(|k| obj.get(*k).map(scalar).unwrap_or_default())
                .collect(),
        );
    }
    let widths: Vec<usize> = (0..keys.len())
        .map(|c| {
            cells
                .iter()
                .map(|r| r[c].chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    Some(
        cells
            .iter()
            .map(|r| {
                r.iter()
                    .zip(&widths)
                    .map(|(cell, w)| format!("{cell:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            })
            .collect(),
    )
}

fn render_object(obj: &Map<String, Value>, indent: usize, out: &mut Vec<String>) {
    let pad = " ".repeat(indent);
    for (k, v) in obj {
        match v {
            Value::Object(inner) => {
                out.push(format!("{pad}{k}:"));
                render_object(inner, indent + 2, out);
            }
            Value::Array(items) if items.iter().any(|i| i.is_object()) => {
                out.push(format!("{pad}{k}:"));
                match as_table(items) {
                    Some(lines) => out.extend(lines.into_iter().map(|l| format!("{pad}  {l}"))),
                    None => out.extend(items.iter().map(|i| format!("{pad}  {i}"))),
                }
            }
            Value::Array(items) if items.iter().any(|i| i.is_array()) => {
                out.push(format!("{pad}{k}:"));
                out.extend(items.iter().map(|i| format!("{pad}  {}", compact(i))));
            }
            other => out.push(format!("{pad}{k}: {}", compact(other))),
        }
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::Array(items) => format!(
            "[{}]",
            items.iter().map(compact).collect::<Vec<_>>().join(", ")
        ),
        other => scalar(other),
    }
}

pub fn text(outcome: &Outcome) -> String {
    let mut lines = vec![format!("{} (modrep {VERSION})", outcome.command)];
    match &outcome.result {
        Value::Object(obj) => render_object(obj, 0, &mut lines),
        other => lines.push(compact(other)),
    }
    let mut s = lines.join("\n");
    s.push('\n');
    s
}
