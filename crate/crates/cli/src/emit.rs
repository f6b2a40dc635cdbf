//! Deterministic CSV and JSON table emitters.
//!
//! Identical resolved configurations must produce byte-identical output:
//! floats are formatted with a fixed significant-digit count (17 in JSON,
//! which is round-trip safe for f64; 12 in CSV for readability), rows
//! follow the grid index order, and line endings are LF.

use std::fmt::Write as _;

/// One table cell. `Missing` renders as an empty CSV field / JSON null.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Value {
    Int(i64),
    Float(f64),
    Missing,
}

/// Column-named table of results.
#[derive(Debug, Clone)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// 17 significant digits, scientific: round-trips any f64 exactly.
pub fn fmt_json_f64(v: f64) -> String {
    format!("{v:.16e}")
}

/// 12 significant digits, scientific.
pub fn fmt_csv_f64(v: f64) -> String {
    format!("{v:.11e}")
}

/// Escape a string for inclusion in a JSON document.
pub fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out
}

/// CSV with a header row, comma separators, LF line endings, and a
/// trailing newline.
pub fn emit_csv(table: &Table) -> String {
    let mut out = String::new();
    out.push_str(&table.columns.join(","));
    out.push('\n');
    for row in &table.rows {
        let mut first = true;
        for cell in row {
            if !first {
                out.push(',');
            }
            first = false;
            match cell {
                Value::Int(i) => {
                    let _ = write!(out, "{i}");
                }
                Value::Float(v) => out.push_str(&fmt_csv_f64(*v)),
                Value::Missing => {}
            }
        }
        out.push('\n');
    }
    out
}

/// JSON document `{"config": <echo>, "rows": [...]}` with one trailing
/// newline. `config_echo` must already be a serialized JSON object.
pub fn emit_json(config_echo: &str, table: &Table) -> String {
    let mut out = String::new();
    out.push_str("{\"config\":");
    out.push_str(config_echo);
    out.push_str(",\"rows\":[");
    for (i, row) in table.rows.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push('{');
        for (j, (name, cell)) in table.columns.iter().zip(row).enumerate() {
            if j > 0 {
                out.push(',');
            }
            let _ = write!(out, "\"{}\":", json_escape(name));
            match cell {
                Value::Int(v) => {
                    let _ = write!(out, "{v}");
                }
                Value::Float(v) => out.push_str(&fmt_json_f64(*v)),
                Value::Missing => out.push_str("null"),
            }
        }
        out.push('}');
    }
    out.push_str("]}\n");
    out
}
