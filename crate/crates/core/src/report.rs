//! Flat verification records and their text, CSV and JSON renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

/// One checked quantity: `{op, n, inputs, value, bound, pass}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub op: String,
    pub n: u64,
    /// Parameters of the check, as a JSON object with sorted keys.
    pub inputs: Map<String, Value>,
    pub value: f64,
    pub bound: f64,
    pub pass: bool,
}

impl Record {
    pub fn new(op: impl Into<String>, n: u64, value: f64, bound: f64, pass: bool) -> Self {
        Self {
            op: op.into(),
            n,
            inputs: Map::new(),
            value,
            bound,
            pass,
        }
    }

    pub fn with_input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(key.to_owned(), value.into());
        self
    }

    fn inputs_inline(&self) -> String {
        self.inputs
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}={s}"),
                other => format!("{k}={other}"),
            })
            .collect::<Vec<_>>()
            .join(";")
    }
}

pub fn all_pass(records: &[Record]) -> bool {
    records.iter().all(|r| r.pass)
}

pub fn to_json(records: &[Record]) -> String {
    serde_json::to_string_pretty(records).expect("records always serialize")
}

pub const CSV_HEADER: &str = "op,n,inputs,value,bound,pass";

fn csv_field(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_owned()
    }
}

pub fn to_csv(records: &[Record]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            csv_field(&r.op),
            r.n,
            csv_field(&r.inputs_inline()),
            r.value,
            r.bound,
            r.pass
        );
    }
    out
}

/// Aligned columns, one row per record.
pub fn to_table(records: &[Record]) -> String {
    let header = ["op", "n", "inputs", "value", "bound", "pass"].map(String::from);
    let rows: Vec<[String; 6]> = records
        .iter()
        .map(|r| {
            [
                r.op.clone(),
                r.n.to_string(),
                r.inputs_inline(),
                format!("{:.10}", r.value),
                format!("{:.10}", r.bound),
                if r.pass { "ok" } else { "FAIL" }.to_owned(),
            ]
        })
        .collect();
    let mut widths = header.clone().map(|h| h.len());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(&header).chain(&rows) {
        let line = row
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(i, (cell, &w))| {
                // Numbers right-aligned, text left-aligned.
                if matches!(i, 1 | 3 | 4) {
                    format!("{cell:>w$}")
                } else {
                    format!("{cell:<w$}")
                }
            })
            .collect::<Vec<_>>()
            .join("  ");
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
