//! Body files.
//!
//! CSV: one `x,y` pair per line, no header, counterclockwise. Blank lines
//! and lines starting with `#` are skipped. JSON: `{"vertices": [[x, y], …]}`.
//! Coordinates are written in shortest round-trip form, so a body read back
//! is bit-identical to the one written.

use std::fs;
use std::io::Write;
use std::path::Path;

use clap::ValueEnum;
use elastica_core::{ConvexBody, Point};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Body file format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BodyFormat {
    /// Header-less `x,y` lines.
    Csv,
    /// `{"vertices": [[x, y], …]}`.
    Json,
}

impl BodyFormat {
    /// `Json` for a `.json` extension, `Csv` otherwise.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => BodyFormat::Json,
            _ => BodyFormat::Csv,
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BodyFile {
    vertices: Vec<[f64; 2]>,
}

/// A parse failure at a 1-based line.
#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    /// Line number; 0 if the position is unknown.
    pub line: u64,
    /// Description.
    pub message: String,
}

fn coordinate(field: &str, line: u64) -> Result<f64, ParseError> {
    match field.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        Ok(_) => Err(ParseError { line, message: format!("non-finite coordinate {field:?}") }),
        Err(_) => Err(ParseError { line, message: format!("cannot parse {field:?} as a number") }),
    }
}

/// Parses CSV vertices. Parsed line by line: the format is two bare
/// numbers per line, and error positions must count skipped lines too.
pub fn parse_csv(text: &str) -> Result<Vec<Point>, ParseError> {
    let mut points = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i as u64 + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = content.split(',').map(str::trim).collect();
        if fields.len() != 2 {
            return Err(ParseError { line, message: format!("expected 2 fields, found {}", fields.len()) });
        }
        points.push(Point::new(coordinate(fields[0], line)?, coordinate(fields[1], line)?));
    }
    Ok(points)
}

/// Parses JSON vertices.
pub fn parse_json(text: &str) -> Result<Vec<Point>, ParseError> {
    let file: BodyFile =
        serde_json::from_str(text).map_err(|e| ParseError { line: e.line() as u64, message: e.to_string() })?;
    Ok(file.vertices.into_iter().map(|[x, y]| Point::new(x, y)).collect())
}

/// Reads and validates a body file.
pub fn read_body(path: &Path, format: Option<BodyFormat>) -> Result<ConvexBody, CliError> {
    let text = fs::read_to_string(path).map_err(CliError::io(format!("reading {}", path.display())))?;
    let parsed = match format.unwrap_or_else(|| BodyFormat::from_path(path)) {
        BodyFormat::Csv => parse_csv(&text),
        BodyFormat::Json => parse_json(&text),
    };
    let points =
        parsed.map_err(|e| CliError::Input { path: path.display().to_string(), line: e.line, message: e.message })?;
    ConvexBody::new(points).map_err(CliError::Validation)
}

/// Writes vertices as CSV.
pub fn write_csv(points: &[Point], out: impl Write) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    for p in points {
        w.serialize((p.x, p.y))?;
    }
    w.flush()?;
    Ok(())
}

/// Writes vertices as JSON.
pub fn write_json(points: &[Point], mut out: impl Write) -> std::io::Result<()> {
    let file = BodyFile { vertices: points.iter().map(|p| [p.x, p.y]).collect() };
    serde_json::to_writer(&mut out, &file)?;
    writeln!(out)
}
