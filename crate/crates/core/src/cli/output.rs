//! Tabular results and their CSV, JSON and plain-text renderings.

use std::collections::BTreeMap;
use std::io::Write;

use clap::ValueEnum;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    Csv,
    Json,
    #[default]
    Table,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i128),
    Float(f64),
    Bool(bool),
    Text(String),
    Null,
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v as i128)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(v as i128)
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

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Null, Into::into)
    }
}

/// `v` with `digits` significant digits, in the style of `%g`.
pub fn fmt_sig(v: f64, digits: usize) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    if v == 0.0 {
        return "0".into();
    }
    let digits = digits.clamp(1, 17);
    let sci = format!("{:.*e}", digits - 1, v);
    let (mant, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..digits as i32).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(format!("{v:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mant.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

impl Cell {
    fn text(&self, digits: usize) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => fmt_sig(*v, digits),
            Cell::Bool(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Null => String::new(),
        }
    }

    fn json(&self, digits: usize) -> Value {
        match self {
            Cell::Int(v) => json!(*v as i64),
            Cell::Float(v) if v.is_finite() => {
                json!(fmt_sig(*v, digits).parse::<f64>().expect("formatted float parses"))
            }
            Cell::Float(_) | Cell::Null => Value::Null,
            Cell::Bool(v) => json!(v),
            Cell::Text(s) => json!(s),
        }
    }
}

/// A command's result: named columns plus metadata for the JSON envelope.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    /// Additional top-level JSON members, e.g. `claims` or `summary`.
    pub extra: Vec<(String, Value)>,
    /// Plain-text rendering that replaces the aligned table.
    pub text: Option<String>,
}

impl Report {
    pub fn new(command: &str, columns: &[&str]) -> Self {
        Report {
            command: command.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            ..Report::default()
        }
    }

    pub fn param(mut self, key: &str, value: impl serde::Serialize) -> Self {
        self.params.insert(key.into(), serde_json::to_value(value).unwrap_or(Value::Null));
        self
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn write(&self, format: Format, digits: usize, out: &mut dyn Write) -> Result<()> {
        match format {
            Format::Csv => self.write_csv(digits, out),
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.to_json(digits))?;
                out.write_all(b"\n")?;
                Ok(())
            }
            Format::Table => self.write_table(digits, out),
        }
    }

    fn write_csv(&self, digits: usize, out: &mut dyn Write) -> Result<()> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(|c| c.text(digits)))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_json(&self, digits: usize) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> =
                    self.columns.iter().cloned().zip(row.iter().map(|c| c.json(digits))).collect();
                Value::Object(obj)
            })
            .collect();
        let mut top = Map::new();
        top.insert(
            "meta".into(),
            json!({
                "command": self.command,
                "params": self.params,
                "version": env!("CARGO_PKG_VERSION"),
            }),
        );
        top.insert("rows".into(), Value::Array(rows));
        for (k, v) in &self.extra {
            top.insert(k.clone(), v.clone());
        }
        Value::Object(top)
    }

    fn write_table(&self, digits: usize, out: &mut dyn Write) -> Result<()> {
        if let Some(text) = &self.text {
            writeln!(out, "{text}")?;
            return Ok(());
        }
        let cells: Vec<Vec<String>> =
            self.rows.iter().map(|r| r.iter().map(|c| c.text(digits)).collect()).collect();
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|i| cells.iter().map(|r| r[i].len()).chain([self.columns[i].len()]).max().unwrap_or(0))
            .collect();
        let line = |items: &[String]| {
            items.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect::<Vec<_>>().join("  ")
        };
        writeln!(out, "{}", line(&self.columns))?;
        for r in &cells {
            writeln!(out, "{}", line(r))?;
        }
        Ok(())
    }
}

/// Reads a CSV with the given header back into rows of strings.
pub fn read_csv(path: &std::path::Path, expected: &[&str]) -> Result<Vec<csv::StringRecord>> {
    let mut r = csv::Reader::from_path(path)?;
    let header: Vec<String> = r.headers()?.iter().map(str::to_string).collect();
    if header != expected {
        return Err(Error::Format(format!(
            "{}: expected header {}, found {}",
            path.display(),
            expected.join(","),
            header.join(",")
        )));
    }
    r.records().map(|rec| rec.map_err(Error::from)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(fmt_sig(100.5, 12), "100.5");
        assert_eq!(fmt_sig(std::f64::consts::PI, 12), "3.14159265359");
        assert_eq!(fmt_sig(-1.25e-7, 3), "-1.25e-7");
        assert_eq!(fmt_sig(3.0e20, 12), "3e20");
        assert_eq!(fmt_sig(0.0, 12), "0");
        assert_eq!(fmt_sig(123456.0, 3), "1.23e5");
        assert_eq!(fmt_sig(0.000123, 12), "0.000123");
    }

    #[test]
    fn seventeen_digits_round_trip() {
        for v in [0.1 + 0.2, -1.0 / 3.0, 2.5e-300, 12345.678901234567] {
            assert_eq!(fmt_sig(v, 17).parse::<f64>().unwrap(), v);
        }
    }

    #[test]
    fn csv_uses_lf_and_header() {
        let mut r = Report::new("t", &["x", "count"]);
        r.push(vec![1.5.into(), 3u64.into()]);
        let mut buf = Vec::new();
        r.write(Format::Csv, 12, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "x,count\n1.5,3\n");
    }

    #[test]
    fn json_envelope() {
        let mut r = Report::new("sum", &["x", "normalized"]).param("x", 2.0);
        r.push(vec![2.0.into(), Cell::Null]);
        let v = r.to_json(12);
        assert_eq!(v["meta"]["command"], "sum");
        assert_eq!(v["meta"]["params"]["x"], 2.0);
        assert_eq!(v["rows"][0]["x"], 2.0);
        assert!(v["rows"][0]["normalized"].is_null());
    }
}
