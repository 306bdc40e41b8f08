//! The monoid file format: a line-oriented text document with `elements:`,
//! `unit:`, and `table:` sections, where table cells are element labels.
//! Dual files append a `homs:` payload and bidual files a `delta:` map;
//! the parser accepts and skips both, so every emitted file parses back.

use std::fmt;
use std::fs;
use std::path::Path;

use mondual::dual::DualMonoid;
use mondual::{FiniteMonoid, MonoidMorphism};

#[derive(Debug)]
pub enum FileError {
    Io(std::io::Error),
    /// A malformed document, with the 1-based offending line.
    Parse { line: usize, message: String },
    /// A well-formed document describing something that is not a monoid.
    Invalid(mondual::Error),
}

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FileError::Io(e) => write!(f, "io error: {e}"),
            FileError::Parse { line, message } => write!(f, "line {line}: {message}"),
            FileError::Invalid(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for FileError {}

impl From<mondual::Error> for FileError {
    fn from(e: mondual::Error) -> Self {
        FileError::Invalid(e)
    }
}

impl From<std::io::Error> for FileError {
    fn from(e: std::io::Error) -> Self {
        FileError::Io(e)
    }
}

fn parse_error(line: usize, message: impl Into<String>) -> FileError {
    FileError::Parse {
        line,
        message: message.into(),
    }
}

/// Parse a monoid document. Lines whose first non-blank character is `#`
/// are comments; `homs:` and `delta:` sections are skipped.
pub fn parse_monoid_str(text: &str) -> Result<FiniteMonoid, FileError> {
    // (1-based line number, content) with comments and blanks dropped
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (n_line, elements_line) = lines
        .next()
        .ok_or_else(|| parse_error(1, "empty document; expected 'elements:'"))?;
    let labels: Vec<String> = elements_line
        .strip_prefix("elements:")
        .ok_or_else(|| parse_error(n_line, "expected 'elements:' section first"))?
        .split_whitespace()
        .map(str::to_string)
        .collect();
    if labels.is_empty() {
        return Err(parse_error(n_line, "'elements:' lists no labels"));
    }
    let index_of = |label: &str, line: usize| -> Result<usize, FileError> {
        labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| parse_error(line, format!("undeclared label {label:?}")))
    };

    let (u_line, unit_line) = lines
        .next()
        .ok_or_else(|| parse_error(n_line, "missing 'unit:' section"))?;
    let unit_label = unit_line
        .strip_prefix("unit:")
        .ok_or_else(|| parse_error(u_line, "expected 'unit:' after 'elements:'"))?
        .trim();
    let unit = index_of(unit_label, u_line)?;

    let (t_line, table_header) = lines
        .next()
        .ok_or_else(|| parse_error(u_line, "missing 'table:' section"))?;
    if table_header != "table:" {
        return Err(parse_error(t_line, "expected 'table:' after 'unit:'"));
    }
    let mut table = Vec::with_capacity(labels.len());
    for _ in 0..labels.len() {
        let (r_line, row_text) = lines
            .next()
            .ok_or_else(|| parse_error(t_line, format!("table needs {} rows", labels.len())))?;
        let row: Vec<usize> = row_text
            .split_whitespace()
            .map(|cell| index_of(cell, r_line))
            .collect::<Result<_, _>>()?;
        if row.len() != labels.len() {
            return Err(parse_error(
                r_line,
                format!("table row has {} cells, expected {}", row.len(), labels.len()),
            ));
        }
        table.push(row);
    }

    // optional payload sections, in order
    let mut section = "";
    for (p_line, line) in lines {
        if line == "homs:" && section.is_empty() {
            section = "homs";
        } else if line == "delta:" && section != "delta" {
            section = "delta";
        } else if section.is_empty() {
            return Err(parse_error(p_line, format!("unexpected content {line:?}")));
        }
    }

    Ok(FiniteMonoid::new(labels, unit, table)?)
}

pub fn parse_monoid_file(path: &Path) -> Result<FiniteMonoid, FileError> {
    parse_monoid_str(&fs::read_to_string(path)?)
}

/// Render the three core sections. Output always ends in a newline and
/// reparses to an identical monoid.
pub fn serialize_monoid(m: &FiniteMonoid) -> String {
    let mut out = String::new();
    out.push_str("elements:");
    for l in m.labels() {
        out.push(' ');
        out.push_str(l);
    }
    out.push('\n');
    out.push_str("unit: ");
    out.push_str(m.label(m.unit()));
    out.push('\n');
    out.push_str("table:\n");
    for i in 0..m.size() {
        let row: Vec<&str> = (0..m.size()).map(|j| m.label(m.mul(i, j))).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Render a dual monoid: its own Cayley sections plus the hom payload, one
/// line per hom listing its value on each source element in order.
pub fn serialize_dual(dual: &DualMonoid) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "# homs over {} source elements:",
        dual.source.size()
    ));
    for l in dual.source.labels() {
        out.push(' ');
        out.push_str(l);
    }
    out.push('\n');
    out.push_str(&serialize_monoid(&dual.base));
    out.push_str("homs:\n");
    for (i, h) in dual.homs.iter().enumerate() {
        out.push_str(dual.base.label(i));
        out.push(':');
        for v in &h.values {
            out.push(' ');
            out.push_str(&v.to_string());
        }
        out.push('\n');
    }
    out
}

/// Render a bidual together with δ as an explicit label-to-label map.
pub fn serialize_bidual(bidual: &DualMonoid, delta: &MonoidMorphism) -> String {
    let mut out = serialize_dual(bidual);
    out.push_str("delta:\n");
    for x in 0..delta.source.size() {
        out.push_str(&format!(
            "{} -> {}\n",
            delta.source.label(x),
            delta.target.label(delta.apply(x))
        ));
    }
    out
}
