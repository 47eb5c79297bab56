use std::io::Write;

use clap::ValueEnum;
use serde_json::{json, Map, Value};

pub const SCHEMA: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

/// Rows for the csv and table renderings.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Self { columns: columns.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// Result of one command on one graph.
pub struct Output {
    pub json: Value,
    pub table: Table,
    /// A verified inequality failure (exit code 1).
    pub violation: bool,
}

/// Rounds to 12 significant digits; non-finite values become `null`.
pub fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    json!(if rounded == 0.0 { 0.0 } else { rounded })
}

pub fn nums(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| num(x)).collect())
}

pub fn opt_num(x: Option<f64>) -> Value {
    x.map_or(Value::Null, num)
}

/// Applies [`num`] to every float in a serialized value.
pub fn normalize(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => num(n.as_f64().unwrap()),
        Value::Array(a) => Value::Array(a.into_iter().map(normalize).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, normalize(v))).collect()),
        other => other,
    }
}

/// Prepends `"schema": 1`.
pub fn record(body: Value) -> Value {
    let mut out = Map::new();
    out.insert("schema".into(), json!(SCHEMA));
    if let Value::Object(o) = body {
        out.extend(o);
    }
    Value::Object(out)
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub struct Printer<W: Write> {
    out: W,
    format: Format,
    batch: bool,
    header_done: bool,
}

impl<W: Write> Printer<W> {
    pub fn new(out: W, format: Format, batch: bool) -> Self {
        Self { out, format, batch, header_done: false }
    }

    /// Emits one output; `index` is the line number in batch mode.
    pub fn emit(&mut self, index: Option<usize>, output: &Output) -> std::io::Result<()> {
        match self.format {
            Format::Json => {
                let v = match (index, &output.json) {
                    (Some(i), Value::Object(o)) => {
                        let mut m = Map::new();
                        m.insert("schema".into(), json!(SCHEMA));
                        m.insert("index".into(), json!(i));
                        m.extend(o.iter().filter(|(k, _)| *k != "schema").map(|(k, v)| (k.clone(), v.clone())));
                        Value::Object(m)
                    }
                    _ => output.json.clone(),
                };
                if self.batch {
                    writeln!(self.out, "{}", serde_json::to_string(&v)?)
                } else {
                    writeln!(self.out, "{}", serde_json::to_string_pretty(&v)?)
                }
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut self.out);
                if !self.header_done {
                    let mut head: Vec<&str> = Vec::new();
                    if self.batch {
                        head.push("index");
                    }
                    head.extend(&output.table.columns);
                    w.write_record(&head)?;
                    self.header_done = true;
                }
                for row in &output.table.rows {
                    let mut cells: Vec<String> = index.map(|i| i.to_string()).into_iter().collect();
                    cells.extend(row.iter().map(cell));
                    w.write_record(&cells)?;
                }
                w.flush()
            }
            Format::Table => {
                let mut columns: Vec<String> = Vec::new();
                if self.batch {
                    columns.push("index".into());
                }
                columns.extend(output.table.columns.iter().map(|c| c.to_string()));
                let rows: Vec<Vec<String>> = output
                    .table
                    .rows
                    .iter()
                    .map(|r| index.map(|i| i.to_string()).into_iter().chain(r.iter().map(cell)).collect())
                    .collect();
                let widths: Vec<usize> = (0..columns.len())
                    .map(|c| rows.iter().map(|r| r[c].len()).chain([columns[c].len()]).max().unwrap_or(0))
                    .collect();
                let line = |cells: &[String]| {
                    cells.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect::<Vec<_>>().join("  ")
                };
                if !self.header_done {
                    writeln!(self.out, "{}", line(&columns).trim_end())?;
                    self.header_done = !self.batch;
                }
                for r in &rows {
                    writeln!(self.out, "{}", line(r).trim_end())?;
                }
                Ok(())
            }
        }
    }

    /// An error line in batch mode.
    pub fn emit_error(&mut self, index: usize, kind: &str, message: &str) -> std::io::Result<()> {
        match self.format {
            Format::Json => {
                let v = record(json!({ "index": index, "error": { "kind": kind, "message": message } }));
                writeln!(self.out, "{}", serde_json::to_string(&v)?)
            }
            _ => writeln!(self.out, "# graph {index}: {kind}: {message}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_digits() {
        assert_eq!(num(1.0 / 3.0), json!(0.333333333333));
        assert_eq!(num(2.0), json!(2.0));
        assert_eq!(num(f64::INFINITY), Value::Null);
        assert_eq!(num(-0.0), json!(0.0));
        assert_eq!(num(4.999999999999988), json!(5.0));
    }

    #[test]
    fn normalize_nested() {
        let v = normalize(json!({ "a": [0.1 + 0.2, 1], "b": { "c": 3.0f64.sqrt() } }));
        assert_eq!(v, json!({ "a": [0.3, 1], "b": { "c": 1.73205080757 } }));
    }
}
