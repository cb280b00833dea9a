//! Plain-text brace documents.
//!
//! ```text
//! name: B4
//! order: 4
//! meta: source = bilinear
//! add:
//! 0 1 2 3
//! ...
//! circ:
//! ...
//! ```
//!
//! Lines starting with `#` and blank lines are ignored. Element `0` is the
//! identity of both tables.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use crate::brace::{make_brace, SkewBrace};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BraceDoc {
    pub name: String,
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub circ: Vec<Vec<usize>>,
    pub metadata: BTreeMap<String, String>,
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

impl BraceDoc {
    pub fn from_brace(name: &str, b: &SkewBrace) -> Self {
        BraceDoc {
            name: name.to_string(),
            order: b.order(),
            add: b.add_rows(),
            circ: b.circ_rows(),
            metadata: BTreeMap::new(),
        }
    }

    pub fn with_meta(mut self, key: &str, value: impl ToString) -> Self {
        self.metadata.insert(key.to_string(), value.to_string());
        self
    }

    /// Validated brace; axiom and group failures are forwarded unchanged.
    pub fn to_brace(&self) -> Result<SkewBrace> {
        make_brace(&self.add, &self.circ)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut name = None;
        let mut order: Option<usize> = None;
        let mut metadata = BTreeMap::new();
        let mut tables: [Option<Vec<Vec<usize>>>; 2] = [None, None];
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let mut last_line = 0;
        while let Some((no, line)) = lines.next() {
            last_line = no;
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| parse_error(no, format!("expected `key: value`, found `{line}`")))?;
            let value = value.trim();
            match key.trim() {
                "name" => {
                    if name.replace(value.to_string()).is_some() {
                        return Err(parse_error(no, "duplicate name"));
                    }
                }
                "order" => {
                    let n: usize = value.parse().map_err(|_| parse_error(no, format!("bad order `{value}`")))?;
                    if n == 0 {
                        return Err(parse_error(no, "order must be positive"));
                    }
                    if order.replace(n).is_some() {
                        return Err(parse_error(no, "duplicate order"));
                    }
                }
                "meta" => {
                    let (k, v) = value
                        .split_once('=')
                        .ok_or_else(|| parse_error(no, "metadata must be `meta: key = value`"))?;
                    metadata.insert(k.trim().to_string(), v.trim().to_string());
                }
                which @ ("add" | "circ") => {
                    let n = order.ok_or_else(|| parse_error(no, "order must precede the tables"))?;
                    if !value.is_empty() {
                        return Err(parse_error(no, format!("table rows start on the line after `{which}:`")));
                    }
                    let slot = &mut tables[usize::from(which == "circ")];
                    if slot.is_some() {
                        return Err(parse_error(no, format!("duplicate {which} table")));
                    }
                    let mut rows = Vec::with_capacity(n);
                    for r in 0..n {
                        let (row_no, row) = lines
                            .next()
                            .ok_or_else(|| parse_error(last_line, format!("{which} table has {r} rows, expected {n}")))?;
                        last_line = row_no;
                        let entries = row
                            .split_whitespace()
                            .map(|t| t.parse::<usize>().map_err(|_| parse_error(row_no, format!("bad entry `{t}`"))))
                            .collect::<Result<Vec<_>>>()?;
                        if entries.len() != n {
                            return Err(parse_error(
                                row_no,
                                format!("{which} row {r} has {} entries, expected {n}", entries.len()),
                            ));
                        }
                        rows.push(entries);
                    }
                    *slot = Some(rows);
                }
                other => return Err(parse_error(no, format!("unknown field `{other}`"))),
            }
        }
        let [add, circ] = tables;
        let eof = last_line + 1;
        Ok(BraceDoc {
            name: name.ok_or_else(|| parse_error(eof, "missing name"))?,
            order: order.ok_or_else(|| parse_error(eof, "missing order"))?,
            add: add.ok_or_else(|| parse_error(eof, "missing add table"))?,
            circ: circ.ok_or_else(|| parse_error(eof, "missing circ table"))?,
            metadata,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "name: {}", self.name);
        let _ = writeln!(out, "order: {}", self.order);
        for (k, v) in &self.metadata {
            let _ = writeln!(out, "meta: {k} = {v}");
        }
        for (label, table) in [("add", &self.add), ("circ", &self.circ)] {
            let _ = writeln!(out, "{label}:");
            for row in table {
                let cells: Vec<String> = row.iter().map(usize::to_string).collect();
                let _ = writeln!(out, "{}", cells.join(" "));
            }
        }
        out
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        BraceDoc::parse(&std::fs::read_to_string(path)?)
    }
}

/// Reads and validates a document.
pub fn load_brace(path: impl AsRef<Path>) -> Result<(BraceDoc, SkewBrace)> {
    let doc = BraceDoc::load(path)?;
    let brace = doc.to_brace()?;
    Ok((doc, brace))
}
