//! Deterministic JSON and CSV emission. Reals carry 17 significant digits;
//! non-finite reals become `null` in JSON and empty fields in CSV.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{Map, Number, Value};

pub const SCHEMA_VERSION: &str = "1.0.0";

pub fn fmt_real(x: f64) -> Option<String> {
    x.is_finite().then(|| format!("{x:.16e}"))
}

pub fn real(x: f64) -> Value {
    match fmt_real(x) {
        Some(s) => Value::Number(Number::from_str(&s).expect("formatted reals are valid JSON numbers")),
        None => Value::Null,
    }
}

pub fn reals(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| real(x)).collect())
}

pub fn int(n: usize) -> Value {
    Value::from(n as u64)
}

/// Object from `(key, value)` pairs.
pub fn obj<const N: usize>(pairs: [(&str, Value); N]) -> Value {
    Value::Object(pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect::<Map<_, _>>())
}

pub fn envelope(command: &str, parameters: Value, result: Value) -> Value {
    obj([
        ("schema_version", Value::from(SCHEMA_VERSION)),
        ("command", Value::from(command)),
        ("parameters", parameters),
        ("result", result),
    ])
}

pub fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

/// One CSV cell.
pub enum Cell {
    Int(usize),
    Real(f64),
    Text(String),
    Empty,
}

impl From<usize> for Cell {
    fn from(n: usize) -> Self {
        Cell::Int(n)
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Real(x)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Text(b.to_string())
    }
}

impl From<Option<usize>> for Cell {
    fn from(n: Option<usize>) -> Self {
        n.map_or(Cell::Empty, Cell::Int)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

fn quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn csv(header: &[&str], rows: Vec<Vec<Cell>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row
            .into_iter()
            .map(|c| match c {
                Cell::Int(n) => n.to_string(),
                Cell::Real(x) => fmt_real(x).unwrap_or_default(),
                Cell::Text(s) => quote(&s),
                Cell::Empty => String::new(),
            })
            .collect();
        let _ = writeln!(out, "{}", cells.join(","));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reals_keep_seventeen_digits() {
        assert_eq!(fmt_real(1.0 / 3.0).unwrap(), "3.3333333333333331e-1");
        assert_eq!(to_json(&reals(&[0.1, f64::NAN])), "[\n  1.0000000000000001e-1,\n  null\n]\n");
        let back: f64 = fmt_real(0.1).unwrap().parse().unwrap();
        assert_eq!(back, 0.1);
    }

    #[test]
    fn csv_quotes_text_and_blanks_non_finite() {
        let s = csv(&["a", "b", "c"], vec![vec![Cell::from(1usize), Cell::from(f64::INFINITY), Cell::from("x, y")]]);
        assert_eq!(s, "a,b,c\n1,,\"x, y\"\n");
    }
}
