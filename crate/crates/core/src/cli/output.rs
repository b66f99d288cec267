use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde_json::Value;

use super::{Format, OUTPUT_DIR_ENV};

/// Column-oriented view of a document for CSV output.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: Vec<&'static str>) -> Self {
        Self {
            headers,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Document {
    pub json: Value,
    pub table: Table,
    /// False when a verification inside the command failed.
    pub passed: bool,
}

/// Decimal for moderate magnitudes, scientific otherwise.
pub fn num(x: f64) -> String {
    let a = x.abs();
    if x == 0.0 || (1e-4..1e15).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

pub fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

pub fn resolve(path: &Path) -> PathBuf {
    match std::env::var_os(OUTPUT_DIR_ENV) {
        Some(dir) if path.is_relative() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

fn write_to(doc: &Document, format: Format, mut sink: impl Write) -> io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut sink, &doc.json)?;
            writeln!(sink)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut sink);
            w.write_record(&doc.table.headers)?;
            for row in &doc.table.rows {
                w.write_record(row)?;
            }
            w.flush()?;
        }
    }
    sink.flush()
}

pub fn emit(doc: &Document, format: Format, path: Option<&Path>) -> io::Result<()> {
    match path {
        Some(p) => write_to(doc, format, io::BufWriter::new(File::create(p)?)),
        None => write_to(doc, format, io::stdout().lock()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_format() {
        assert_eq!(num(1.5), "1.5");
        assert_eq!(num(0.0), "0");
        assert_eq!(num(-11.0), "-11");
        assert_eq!(num(2.5e-9), "2.5e-9");
    }
}
