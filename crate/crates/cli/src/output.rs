use std::io::{self, Write};

use serde_json::Value;

use crate::Format;

pub(crate) fn write(report: &Value, format: Format, out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, report)?;
            writeln!(out)
        }
        Format::Csv => write_csv(report, out),
    }
}

const RECORD_HEADER: [&str; 12] = [
    "v0_x", "v0_y", "v1_x", "v1_y", "v2_x", "v2_y", "side01", "side12", "side20", "area", "tags", "congruent_number",
];

/// Reports with a top-level `records` array become one row per triangle,
/// verification reports one row per check, anything else `key,value` rows.
fn write_csv(report: &Value, out: &mut dyn Write) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if let Some(checks) = report.get("checks").and_then(Value::as_array) {
        w.write_record(["item", "ok", "detail"])?;
        for c in checks {
            w.write_record([text(&c["item"]), text(&c["ok"]), text(&c["detail"])])?;
        }
    } else if let Some(records) = report.get("records").and_then(Value::as_array) {
        w.write_record(RECORD_HEADER)?;
        for r in records {
            let mut row: Vec<String> = Vec::with_capacity(RECORD_HEADER.len());
            for v in r["vertices"].as_array().into_iter().flatten() {
                row.extend(v.as_array().into_iter().flatten().map(text));
            }
            row.extend(r["sides"].as_array().into_iter().flatten().map(text));
            row.push(text(&r["area"]));
            let tags: Vec<String> = r["tags"].as_array().into_iter().flatten().map(text).collect();
            row.push(tags.join(";"));
            row.push(text(&r["congruent_number"]));
            w.write_record(&row)?;
        }
    } else {
        w.write_record(["key", "value"])?;
        let mut rows = Vec::new();
        flatten("", report, &mut rows);
        for (k, v) in rows {
            w.write_record([k, v])?;
        }
    }
    w.flush()
}

fn text(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) => map.iter().for_each(|(k, v)| flatten(&key(k), v, rows)),
        Value::Array(items) => items.iter().enumerate().for_each(|(i, v)| flatten(&key(&i.to_string()), v, rows)),
        other => rows.push((prefix.to_string(), text(other))),
    }
}
