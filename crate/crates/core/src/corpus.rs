//! The reference corpus and the directory-wide scan of the open questions.

use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{conjecture_verdicts, ConjectureVerdicts};
use crate::brace::{opposite_brace, trivial_brace, SkewBrace};
use crate::catalog;
use crate::constructions::{bilinear_brace, heisenberg_brace};
use crate::doc::{load_brace, BraceDoc};
use crate::enumeration::{classify_up_to_iso, enumerate_braces_on};
use crate::error::{Error, Result};
use crate::named::{b4, op_s3};

pub const EXTENSION: &str = "brace";

fn product_mod(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|x| (0..n).map(|y| x * y % n).collect()).collect()
}

/// One representative of every isomorphism class of braces on each group of
/// order at most 6, then the named examples and the constructed families.
pub fn generate_corpus() -> Result<Vec<(BraceDoc, SkewBrace)>> {
    let mut out = Vec::new();
    for (group_name, g) in catalog::groups_up_to_six() {
        let family = classify_up_to_iso(enumerate_braces_on(&g)?);
        for (k, &rep) in family.iso_classes.iter().enumerate() {
            let b = family.braces[rep].clone();
            let doc = BraceDoc::from_brace(&format!("{group_name}-{k}"), &b)
                .with_meta("family", "enumerated")
                .with_meta("additive", group_name);
            out.push((doc, b));
        }
    }

    let z2 = catalog::cyclic(2);
    let z3 = catalog::cyclic(3);
    let h_b4 = b4();
    // h-coordinate of B4 is additive for + and for ∘.
    let h_coord = |x: usize| x / 2;
    let over_b4: Vec<Vec<usize>> = (0..4).map(|x| (0..4).map(|y| h_coord(x) * h_coord(y)).collect()).collect();
    let named = [
        ("B4", b4(), "named"),
        ("OpS3", op_s3(), "named"),
        ("OpD4", opposite_brace(&catalog::dihedral(4)), "opposite"),
        ("OpQ8", opposite_brace(&catalog::quaternion8()), "opposite"),
        ("Heis8", heisenberg_brace(&z2, &z2, &z2, &product_mod(2))?, "heisenberg"),
        ("Heis27", heisenberg_brace(&z3, &z3, &z3, &product_mod(3))?, "heisenberg"),
        ("Bil4", bilinear_brace(&trivial_brace(&z2), &z2, &product_mod(2))?, "bilinear"),
        ("Bil9", bilinear_brace(&trivial_brace(&z3), &z3, &product_mod(3))?, "bilinear"),
        ("Bil8", bilinear_brace(&h_b4, &z2, &over_b4)?, "bilinear"),
    ];
    for (name, b, family) in named {
        out.push((BraceDoc::from_brace(name, &b).with_meta("family", family), b));
    }
    Ok(out)
}

/// Writes `name.brace` for every corpus entry; returns the paths written.
pub fn write_corpus(dir: impl AsRef<Path>) -> Result<Vec<PathBuf>> {
    let dir = dir.as_ref();
    std::fs::create_dir_all(dir)?;
    generate_corpus()?
        .into_iter()
        .map(|(doc, _)| {
            let path = dir.join(format!("{}.{EXTENSION}", doc.name));
            doc.save(&path)?;
            Ok(path)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteEntry {
    pub file: String,
    pub name: Option<String>,
    pub order: Option<usize>,
    pub verdicts: Option<ConjectureVerdicts>,
    pub error: Option<String>,
    pub internal: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SuiteTotals {
    pub braces: usize,
    pub errors: usize,
    pub internal_errors: usize,
    pub fix_ker_lambda_ideal: usize,
    pub gamma_left_ideals: usize,
    pub gamma_ideals: usize,
    pub commutator_equality: usize,
    pub raw_sum_ideal: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub entries: Vec<SuiteEntry>,
    pub totals: SuiteTotals,
}

impl SuiteSummary {
    /// `3` on any internal inconsistency, `2` if some file failed to load,
    /// otherwise `0`. Verdicts never affect the status.
    pub fn exit_code(&self) -> i32 {
        if self.totals.internal_errors > 0 {
            3
        } else if self.totals.errors > 0 {
            2
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes")
    }

    pub fn to_text(&self) -> String {
        let mark = |b: bool| if b { "holds" } else { "FAILS" };
        let mut lines = Vec::new();
        for e in &self.entries {
            match (&e.verdicts, &e.error) {
                (Some(v), _) => lines.push(format!(
                    "{:<16} n={:<3} Fix∩kerλ ideal: {}  Γ left ideals: {}  Γ ideals: {}  commutator equality: {}  raw sum ideal: {}",
                    e.name.as_deref().unwrap_or(&e.file),
                    e.order.unwrap_or(0),
                    mark(v.fix_ker_lambda_is_ideal),
                    mark(v.gamma_left_ideals),
                    mark(v.gamma_ideals),
                    mark(v.commutator_equality),
                    mark(v.raw_sum_is_ideal),
                )),
                (None, Some(err)) => lines.push(format!("{:<16} error: {err}", e.file)),
                (None, None) => {}
            }
        }
        let t = &self.totals;
        lines.push(format!(
            "total {} braces, {} errors ({} internal); holds on: Fix∩kerλ ideal {}/{}, Γ left ideals {}/{}, Γ ideals {}/{}, commutator equality {}/{}, raw sum ideal {}/{}",
            t.braces,
            t.errors,
            t.internal_errors,
            t.fix_ker_lambda_ideal,
            t.braces,
            t.gamma_left_ideals,
            t.braces,
            t.gamma_ideals,
            t.braces,
            t.commutator_equality,
            t.braces,
            t.raw_sum_ideal,
            t.braces,
        ));
        lines.join("\n") + "\n"
    }
}

fn scan_file(path: &Path) -> SuiteEntry {
    let file = path.file_name().map_or_else(|| path.display().to_string(), |f| f.to_string_lossy().into_owned());
    let result = load_brace(path).and_then(|(doc, b)| Ok((doc, conjecture_verdicts(&b)?.0)));
    match result {
        Ok((doc, v)) => SuiteEntry {
            file,
            name: Some(doc.name),
            order: Some(doc.order),
            verdicts: Some(v),
            error: None,
            internal: false,
        },
        Err(e) => SuiteEntry {
            file,
            name: None,
            order: None,
            verdicts: None,
            internal: matches!(e, Error::InternalInconsistency(_)),
            error: Some(e.to_string()),
        },
    }
}

/// Scans every `*.brace` file of `dir` in parallel; entries sorted by file name.
pub fn run_conjecture_suite(dir: impl AsRef<Path>) -> Result<SuiteSummary> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == EXTENSION))
        .collect();
    paths.sort();
    let entries: Vec<SuiteEntry> = paths.par_iter().map(|p| scan_file(p)).collect();
    let mut totals = SuiteTotals::default();
    for e in &entries {
        match &e.verdicts {
            Some(v) => {
                totals.braces += 1;
                totals.fix_ker_lambda_ideal += usize::from(v.fix_ker_lambda_is_ideal);
                totals.gamma_left_ideals += usize::from(v.gamma_left_ideals);
                totals.gamma_ideals += usize::from(v.gamma_ideals);
                totals.commutator_equality += usize::from(v.commutator_equality);
                totals.raw_sum_ideal += usize::from(v.raw_sum_is_ideal);
            }
            None => {
                totals.errors += 1;
                totals.internal_errors += usize::from(e.internal);
            }
        }
    }
    Ok(SuiteSummary { entries, totals })
}
