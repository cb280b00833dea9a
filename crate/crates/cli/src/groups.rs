use std::path::Path;

use skewbrace::doc::BraceDoc;
use skewbrace::{catalog, Error, FiniteGroup, Result};

/// A group given either by catalog name (`Z6`, `Z2xZ2`, `S3`, `D4`, `Q8`,
/// `Sym4`, factors joined by `x`) or by a file. A file may hold a brace
/// document, whose additive group is taken, or a bare table.
pub fn resolve_group(spec: &str) -> Result<FiniteGroup> {
    let path = Path::new(spec);
    if path.is_file() {
        return FiniteGroup::new(&read_table_file(path)?);
    }
    let mut factors = spec.split('x').map(named);
    let first = factors.next().ok_or_else(|| unknown(spec))??;
    factors.try_fold(first, |acc, g| Ok(catalog::direct_product(&acc, &g?)))
}

fn unknown(spec: &str) -> Error {
    Error::PreconditionViolated(format!("unknown group '{spec}' (not a file or catalog name)"))
}

fn named(name: &str) -> Result<FiniteGroup> {
    let number = |prefix: &str| name.strip_prefix(prefix).and_then(|s| s.parse::<usize>().ok());
    match name {
        "Q8" => return Ok(catalog::quaternion8()),
        "S3" => return Ok(catalog::symmetric3()),
        "Z1" | "1" => return Ok(FiniteGroup::trivial()),
        _ => {}
    }
    if let Some(k) = number("Sym").filter(|&k| (1..=5).contains(&k)) {
        return Ok(catalog::symmetric(k));
    }
    if let Some(n) = number("Z").filter(|&n| n >= 1) {
        return Ok(catalog::cyclic(n));
    }
    if let Some(m) = number("D").filter(|&m| m >= 3) {
        return Ok(catalog::dihedral(m));
    }
    Err(unknown(name))
}

/// Rows of a square table: the additive table of a brace document, or
/// whitespace-separated integers one row per line with `#` comments.
pub fn read_table_file(path: &Path) -> Result<Vec<Vec<usize>>> {
    let text = std::fs::read_to_string(path)?;
    if text.lines().any(|l| l.trim_start().starts_with("add:")) {
        return Ok(BraceDoc::parse(&text)?.add);
    }
    parse_rows(&text)
}

pub fn parse_rows(text: &str) -> Result<Vec<Vec<usize>>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| {
            l.split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse { line: i + 1, message: format!("'{t}' is not a non-negative integer") })
                })
                .collect()
        })
        .collect()
}

/// Comma-separated element indices.
pub fn parse_elements(list: &str, order: usize) -> Result<Vec<usize>> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| match s.parse::<usize>() {
            Ok(x) if x < order => Ok(x),
            _ => Err(Error::PreconditionViolated(format!("'{s}' is not an element of 0..{order}"))),
        })
        .collect()
}
