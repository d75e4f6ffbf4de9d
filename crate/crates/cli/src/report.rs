//! Tabular reports. CSV and JSON carry the same columns; floats are written
//! with 17 significant digits so a report round-trips bit-exactly.

use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use serde_json::{Map, Value};

use crate::config::Format;
use crate::Failure;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
    Bool(bool),
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => format!("{v:.16e}"),
            Cell::Bool(v) => v.to_string(),
            Cell::Text(s) if s.contains([',', '"', '\n']) => format!("\"{}\"", s.replace('"', "\"\"")),
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::Float(v) if v.is_finite() => Value::from(*v),
            Cell::Float(v) => Value::from(v.to_string()),
            Cell::Bool(v) => Value::from(*v),
            Cell::Text(s) => Value::from(s.as_str()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Table {
    pub command: &'static str,
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(command: &'static str, columns: &[&'static str]) -> Self {
        Self {
            command,
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => {
                let mut out = self.columns.join(",");
                out.push('\n');
                for row in &self.rows {
                    let cells: Vec<String> = row.iter().map(Cell::csv).collect();
                    out.push_str(&cells.join(","));
                    out.push('\n');
                }
                out
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let obj: Map<String, Value> = self
                            .columns
                            .iter()
                            .zip(row)
                            .map(|(k, c)| (k.to_string(), c.json()))
                            .collect();
                        Value::Object(obj)
                    })
                    .collect();
                let mut doc = Map::new();
                doc.insert("command".into(), Value::from(self.command));
                doc.insert("columns".into(), Value::from(self.columns.clone()));
                doc.insert("rows".into(), Value::Array(rows));
                let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("json");
                s.push('\n');
                s
            }
        }
    }
}

/// Writes `contents` to `path` through a temporary file in the same
/// directory, so a failed run never leaves a partial report behind.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let fail = || Failure::Output(path.display().to_string());
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).with_context(fail)?;
    tmp.write_all(contents.as_bytes()).with_context(fail)?;
    tmp.as_file().sync_all().with_context(fail)?;
    tmp.persist(path).map_err(|e| e.error).with_context(fail)?;
    Ok(())
}

pub fn emit(table: &Table, format: Format, out: Option<&Path>) -> Result<()> {
    let text = table.render(format);
    match out {
        Some(path) => write_atomic(path, &text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .with_context(|| Failure::Output("stdout".into()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new("demo", &["M", "value", "label"]);
        t.push(vec![64usize.into(), 0.1f64.into(), "a,b".into()]);
        t
    }

    #[test]
    fn csv_uses_seventeen_digits() {
        let csv = sample().render(Format::Csv);
        assert_eq!(csv, "M,value,label\n64,1.0000000000000001e-1,\"a,b\"\n");
        let back: f64 = "1.0000000000000001e-1".parse().unwrap();
        assert_eq!(back, 0.1);
    }

    #[test]
    fn json_mirrors_columns() {
        let v: Value = serde_json::from_str(&sample().render(Format::Json)).unwrap();
        assert_eq!(v["rows"][0]["M"], 64);
        assert_eq!(v["rows"][0]["value"], 0.1);
        assert_eq!(v["columns"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn atomic_write_to_missing_dir_fails_cleanly() {
        let dir = tempfile::tempdir().unwrap();
        let target = dir.path().join("absent").join("r.csv");
        let err = write_atomic(&target, "x").unwrap_err();
        assert!(matches!(err.downcast_ref::<Failure>(), Some(Failure::Output(_))));
        assert!(!target.exists());
        let ok = dir.path().join("r.csv");
        write_atomic(&ok, "x\n").unwrap();
        assert_eq!(std::fs::read_to_string(ok).unwrap(), "x\n");
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    }
}
