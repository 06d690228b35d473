//! Tabular output as CSV or JSON, with floats written to 17 significant
//! digits.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(u64),
    Text(String),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(x) => fmt_f64(*x),
            Cell::Int(n) => n.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> String {
        match self {
            Cell::Num(x) if x.is_finite() => fmt_f64(*x),
            Cell::Num(_) | Cell::Empty => "null".to_string(),
            Cell::Int(n) => n.to_string(),
            Cell::Text(s) => serde_json::Value::from(s.as_str()).to_string(),
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Empty, Cell::Num)
    }
}

impl From<usize> for Cell {
    fn from(n: usize) -> Self {
        Cell::Int(n as u64)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Table {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn write_to(&self, out: &mut dyn Write, format: Format) -> io::Result<()> {
        match format {
            Format::Csv => {
                writeln!(out, "{}", self.columns.join(","))?;
                for row in &self.rows {
                    let cells: Vec<String> = row.iter().map(Cell::csv).collect();
                    writeln!(out, "{}", cells.join(","))?;
                }
            }
            Format::Json => {
                writeln!(out, "[")?;
                for (i, row) in self.rows.iter().enumerate() {
                    let fields: Vec<String> = self
                        .columns
                        .iter()
                        .zip(row)
                        .map(|(k, v)| format!("\"{k}\":{}", v.json()))
                        .collect();
                    let sep = if i + 1 == self.rows.len() { "" } else { "," };
                    writeln!(out, "  {{{}}}{sep}", fields.join(","))?;
                }
                writeln!(out, "]")?;
            }
        }
        Ok(())
    }

    /// Writes to `path`, or stdout when `None`.
    pub fn emit(&self, path: Option<&Path>, format: Format) -> io::Result<()> {
        match path {
            Some(p) => {
                let mut w = BufWriter::new(File::create(p)?);
                self.write_to(&mut w, format)?;
                w.flush()
            }
            None => {
                let stdout = io::stdout();
                let mut lock = stdout.lock();
                self.write_to(&mut lock, format)
            }
        }
    }
}

/// `%.17g`: 17 significant digits, trailing zeros dropped, scientific
/// notation outside `1e-5 <= |x| < 1e17`.
pub fn fmt_f64(x: f64) -> String {
    if x.is_nan() {
        return "NaN".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0" } else { "0" }.to_string();
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci
        .split_once('e')
        .expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    if !(-5..17).contains(&exp) {
        let mantissa = strip_zeros(mantissa);
        let sign = if exp < 0 { "-" } else { "+" };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (16 - exp) as usize;
        strip_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(fmt_f64(0.6), "0.59999999999999998");
        assert_eq!(fmt_f64(std::f64::consts::FRAC_PI_4), "0.78539816339744828");
        assert_eq!(fmt_f64(1.0), "1");
        assert_eq!(fmt_f64(-2022.0), "-2022");
        assert_eq!(fmt_f64(1e100), "1e+100");
        assert_eq!(fmt_f64(1.5e-7), "1.4999999999999999e-07");
        assert_eq!(fmt_f64(0.0), "0");
        assert_eq!(fmt_f64(f64::NAN), "NaN");
    }

    #[test]
    fn round_trips() {
        for x in [
            0.1,
            1.0 / 3.0,
            123456.789,
            -7.25e-12,
            6.02e23,
            f64::MIN_POSITIVE,
            f64::MAX,
        ] {
            assert_eq!(fmt_f64(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn csv_and_json() {
        let mut t = Table::new(&["a", "b", "c"]);
        t.push(vec![Cell::Num(0.5), Cell::Empty, "x\"y".into()]);
        t.push(vec![Cell::Int(3), Cell::Num(f64::NAN), "ok".into()]);
        let mut csv = Vec::new();
        t.write_to(&mut csv, Format::Csv).unwrap();
        assert_eq!(
            String::from_utf8(csv).unwrap(),
            "a,b,c\n0.5,,x\"y\n3,NaN,ok\n"
        );
        let mut json = Vec::new();
        t.write_to(&mut json, Format::Json).unwrap();
        let parsed: serde_json::Value = serde_json::from_slice(&json).unwrap();
        assert_eq!(parsed[0]["a"], 0.5);
        assert!(parsed[0]["b"].is_null());
        assert_eq!(parsed[0]["c"], "x\"y");
        assert_eq!(parsed[1]["a"], 3);
    }
}
