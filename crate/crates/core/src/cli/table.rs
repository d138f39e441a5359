//! Column tables and their text, CSV and JSON renderings.

use std::io::{self, Write};

use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Chars,
    Hw,
    Verify,
    Branch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// An exponent, kept exact; rendered `a/b` in JSON and CSV, compactly in text.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rat(pub Rational64);

impl Rat {
    fn full(self) -> String {
        format!("{}/{}", self.0.numer(), self.0.denom())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Str(String),
    Exp(Rat),
    Int(u64),
    Empty,
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Str(s) => s.clone(),
            Cell::Exp(r) => r.0.to_string(),
            Cell::Int(n) => n.to_string(),
            Cell::Empty => "-".to_string(),
        }
    }

    fn csv(&self) -> String {
        match self {
            Cell::Str(s) => s.clone(),
            Cell::Exp(r) => r.full(),
            Cell::Int(n) => n.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Str(s) => Value::String(s.clone()),
            Cell::Exp(r) => Value::String(r.full()),
            Cell::Int(n) => Value::from(*n),
            Cell::Empty => Value::Null,
        }
    }
}

pub struct Table {
    pub kind: Kind,
    pub order: Option<i64>,
    pub columns: Vec<&'static str>,
    /// Columns left out of CSV output.
    pub csv_skip: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

/// The JSON document: `{"kind", "order", "rows"}`.
#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub kind: Kind,
    pub order: Option<i64>,
    pub rows: Vec<Map<String, Value>>,
}

impl Table {
    pub fn new(kind: Kind, order: Option<i64>, columns: Vec<&'static str>) -> Self {
        Table {
            kind,
            order,
            columns,
            csv_skip: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn record(&self) -> OutputRecord {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                self.columns
                    .iter()
                    .zip(row)
                    .map(|(c, cell)| (c.to_string(), cell.json()))
                    .collect()
            })
            .collect();
        OutputRecord {
            kind: self.kind,
            order: self.order,
            rows,
        }
    }

    pub fn render(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Text => self.render_text(out),
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.record())?;
                writeln!(out)
            }
            Format::Csv => self.render_csv(out),
        }
    }

    fn render_text(&self, out: &mut dyn Write) -> io::Result<()> {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(Cell::text).collect())
            .collect();
        let widths: Vec<usize> = self
            .columns
            .iter()
            .enumerate()
            .map(|(i, c)| {
                cells
                    .iter()
                    .map(|r| r[i].len())
                    .chain([c.len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |out: &mut dyn Write, row: &[String]| {
            let padded: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:<w$}"))
                .collect();
            writeln!(out, "{}", padded.join("  ").trim_end())
        };
        let header: Vec<String> = self.columns.iter().map(|c| c.to_string()).collect();
        line(out, &header)?;
        for row in &cells {
            line(out, row)?;
        }
        Ok(())
    }

    fn render_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        let keep: Vec<usize> = (0..self.columns.len())
            .filter(|&i| !self.csv_skip.contains(&self.columns[i]))
            .collect();
        let mut writer = csv::Writer::from_writer(out);
        writer.write_record(keep.iter().map(|&i| self.columns[i]))?;
        for row in &self.rows {
            writer.write_record(keep.iter().map(|&i| row[i].csv()))?;
        }
        writer.flush()
    }
}
