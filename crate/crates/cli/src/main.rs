mod groups;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;
use skewbrace::constructions::{bilinear_brace, extract_cocycles, heisenberg_brace, rebuild_from_cocycles, Cocycles};
use skewbrace::corpus::run_conjecture_suite;
use skewbrace::doc::{load_brace, BraceDoc};
use skewbrace::enumeration::{classify_up_to_iso, enumerate_braces_on};
use skewbrace::series::{series_of_kind, SeriesKind};
use skewbrace::substructures::ideal_closure;
use skewbrace::ybe::{canonical_solution, summarize};
use skewbrace::{
    analyze, make_brace, opposite_brace, smith_commutator, trivial_brace, verify_identities, ElementSet, Error,
    FiniteGroup, Result, SkewBrace,
};

use groups::{parse_elements, read_table_file, resolve_group};

#[derive(Parser)]
#[command(name = "skewbrace", version, about = "Finite skew braces given by operation tables")]
struct Cli {
    /// Output format: human-readable text or structured JSON.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Struct,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Zeta,
    Gamma,
    Left,
    Right,
    Mixed,
}

impl From<Kind> for SeriesKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Zeta => SeriesKind::UpperZeta,
            Kind::Gamma => SeriesKind::LowerGamma,
            Kind::Left => SeriesKind::LeftStar,
            Kind::Right => SeriesKind::RightStar,
            Kind::Mixed => SeriesKind::MixedStar,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Load and validate a brace document, then re-check the standard identities.
    Verify { file: PathBuf },
    /// Full analysis report.
    Analyze { file: PathBuf },
    /// One central or `*`-series.
    Series {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::Zeta)]
        kind: Kind,
    },
    /// Commutator of the ideals generated by two lists of elements.
    Commutator {
        file: PathBuf,
        /// Comma-separated generators of the first ideal.
        #[arg(long)]
        left: String,
        /// Comma-separated generators of the second ideal.
        #[arg(long)]
        right: String,
    },
    /// Build a brace and write it as a document.
    #[command(subcommand)]
    Construct(Construct),
    /// Canonical set-theoretic solution of the Yang-Baxter equation.
    Ybe {
        file: PathBuf,
        /// Also print the table of r(x, y).
        #[arg(long)]
        emit: bool,
    },
    /// All braces with a given additive group.
    Enumerate {
        /// Catalog name (Z4, Z2xZ2, S3, D4, Q8, ...) or a file with a group table.
        #[arg(long)]
        group: String,
        /// Keep one representative per isomorphism class.
        #[arg(long)]
        up_to_iso: bool,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Scan a directory of brace documents for the open questions.
    Conjectures { dir: PathBuf },
}

#[derive(Subcommand)]
enum Construct {
    /// `x∘y = x+y`.
    Trivial {
        #[arg(long)]
        group: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// `x∘y = y+x`.
    Opposite {
        #[arg(long)]
        group: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Brace on `K × H` twisted by a bilinear map `θ: H × H → K`.
    Bilinear {
        /// Brace document for `H`.
        #[arg(long)]
        h: PathBuf,
        /// Abelian group `K`.
        #[arg(long)]
        k: String,
        /// Table of `θ`, `|H|` rows of `|H|` entries in `K`.
        #[arg(long)]
        theta: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Heisenberg-type brace on `E × F × A` from a bilinear `ω: E × F → A`.
    Heisenberg {
        #[arg(long)]
        e: String,
        #[arg(long)]
        f: String,
        #[arg(long)]
        a: String,
        /// Table of `ω`, `|E|` rows of `|F|` entries in `A`.
        #[arg(long)]
        omega: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Split a brace over its center into quotient, kernel and cocycles (JSON).
    Extract {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Rebuild a brace from an extension file written by `extract`.
    Rebuild {
        extension: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

/// On-disk form of a central extension.
#[derive(Serialize, Deserialize)]
struct ExtensionFile {
    quotient_add: Vec<Vec<usize>>,
    quotient_circ: Vec<Vec<usize>>,
    kernel: Vec<Vec<usize>>,
    kernel_members: Vec<usize>,
    cocycles: Cocycles,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn emit(format: Format, text: String, value: serde_json::Value) {
    match format {
        Format::Text => print!("{text}"),
        Format::Struct => println!("{}", serde_json::to_string_pretty(&value).expect("value serializes")),
    }
}

fn run(cli: &Cli) -> Result<u8> {
    let format = cli.format;
    match &cli.command {
        Command::Verify { file } => verify(format, file),
        Command::Analyze { file } => {
            let (doc, b) = load_brace(file)?;
            let report = analyze(&doc.name, &b)?;
            match format {
                Format::Text => print!("{}", report.to_text()),
                Format::Struct => println!("{}", report.to_json()),
            }
            Ok(0)
        }
        Command::Series { file, kind } => {
            let (_, b) = load_brace(file)?;
            let s = series_of_kind(&b, (*kind).into())?;
            let mut text = format!("{} series\n", s.kind);
            for (i, stage) in s.stages.iter().enumerate() {
                text += &format!("  {}: {} (order {})\n", i + s.first_index, stage, stage.len());
            }
            text += &match s.class_index {
                Some(c) => format!("reaches its end at index {c}\n"),
                None => "never reaches its end\n".to_string(),
            };
            emit(format, text, serde_json::to_value(&s).expect("series serializes"));
            Ok(0)
        }
        Command::Commutator { file, left, right } => {
            let (_, b) = load_brace(file)?;
            let closure = |list: &str| -> Result<ElementSet> {
                let gens = parse_elements(list, b.order())?;
                Ok(ideal_closure(&b, &ElementSet::from_members(b.order(), gens)))
            };
            let (i, j) = (closure(left)?, closure(right)?);
            let c = smith_commutator(&b, &i, &j)?;
            let text = format!("I = {i}\nJ = {j}\n[I, J] = {c}\n");
            emit(format, text, json!({ "left": i, "right": j, "commutator": c }));
            Ok(0)
        }
        Command::Construct(c) => construct(format, c),
        Command::Ybe { file, emit: table } => {
            let (_, b) = load_brace(file)?;
            let s = canonical_solution(&b)?;
            let summary = summarize(&s);
            let mut text = format!(
                "ybe: {}\nnondegenerate: {}\ninvolutive: {}\n",
                summary.holds, summary.nondegenerate, summary.involutive
            );
            let mut rows = Vec::new();
            if *table {
                for x in 0..s.size() {
                    for y in 0..s.size() {
                        let (u, v) = s.apply(x, y);
                        text += &format!("r({x}, {y}) = ({u}, {v})\n");
                        rows.push([x, y, u, v]);
                    }
                }
            }
            emit(format, text, json!({ "summary": summary, "solution": table.then_some(rows) }));
            Ok(if summary.holds && summary.nondegenerate { 0 } else { 3 })
        }
        Command::Enumerate { group, up_to_iso, output } => enumerate(format, group, *up_to_iso, output),
        Command::Conjectures { dir } => {
            let summary = run_conjecture_suite(dir)?;
            match format {
                Format::Text => print!("{}", summary.to_text()),
                Format::Struct => println!("{}", summary.to_json()),
            }
            Ok(summary.exit_code() as u8)
        }
    }
}

fn verify(format: Format, file: &Path) -> Result<u8> {
    let (doc, b) = load_brace(file)?;
    let report = verify_identities(&b);
    let mut text = format!("{}: valid skew brace of order {}\n", doc.name, b.order());
    for c in &report.checks {
        let status = if c.passed { "ok".to_string() } else { format!("FAILS at {:?}", c.witness) };
        text += &format!("  {}: {status}\n", c.name);
    }
    emit(format, text, json!({ "name": doc.name, "order": b.order(), "identities": report }));
    // A validated brace that breaks a derived identity is a bug, not bad input.
    Ok(if report.all_passed() { 0 } else { 3 })
}

fn write_doc(format: Format, doc: BraceDoc, output: &Path) -> Result<u8> {
    doc.save(output)?;
    let text = format!("wrote {} ({}, order {})\n", output.display(), doc.name, doc.order);
    emit(format, text, json!({ "path": output, "name": doc.name, "order": doc.order }));
    Ok(0)
}

fn label(spec: &str) -> String {
    let p = Path::new(spec);
    match p.file_stem() {
        Some(stem) if p.is_file() => stem.to_string_lossy().into_owned(),
        _ => spec.to_string(),
    }
}

fn construct(format: Format, c: &Construct) -> Result<u8> {
    match c {
        Construct::Trivial { group, output } => {
            let b = trivial_brace(&resolve_group(group)?);
            let doc = BraceDoc::from_brace(&format!("Triv{}", label(group)), &b).with_meta("source", "trivial");
            write_doc(format, doc, output)
        }
        Construct::Opposite { group, output } => {
            let b = opposite_brace(&resolve_group(group)?);
            let doc = BraceDoc::from_brace(&format!("Op{}", label(group)), &b).with_meta("source", "opposite");
            write_doc(format, doc, output)
        }
        Construct::Bilinear { h, k, theta, output } => {
            let (hdoc, hb) = load_brace(h)?;
            let b = bilinear_brace(&hb, &resolve_group(k)?, &read_table_file(theta)?)?;
            let doc = BraceDoc::from_brace(&format!("Bil{}", b.order()), &b)
                .with_meta("source", "bilinear")
                .with_meta("h", &hdoc.name)
                .with_meta("k", label(k));
            write_doc(format, doc, output)
        }
        Construct::Heisenberg { e, f, a, omega, output } => {
            let b = heisenberg_brace(&resolve_group(e)?, &resolve_group(f)?, &resolve_group(a)?, &read_table_file(omega)?)?;
            let doc = BraceDoc::from_brace(&format!("Heis{}", b.order()), &b).with_meta("source", "heisenberg");
            write_doc(format, doc, output)
        }
        Construct::Extract { file, output } => {
            let (doc, b) = load_brace(file)?;
            let ext = extract_cocycles(&b)?;
            let out = ExtensionFile {
                quotient_add: ext.quotient.add_rows(),
                quotient_circ: ext.quotient.circ_rows(),
                kernel: ext.kernel.rows(),
                kernel_members: ext.kernel_members,
                cocycles: ext.cocycles,
            };
            std::fs::write(output, serde_json::to_string_pretty(&out).expect("extension serializes"))?;
            let text = format!(
                "wrote {}: {} = central extension of a quotient of order {} by a kernel of order {}\n",
                output.display(),
                doc.name,
                out.quotient_add.len(),
                out.kernel.len()
            );
            emit(format, text, json!({ "path": output, "quotient_order": out.quotient_add.len(), "kernel_order": out.kernel.len() }));
            Ok(0)
        }
        Construct::Rebuild { extension, output } => {
            let text = std::fs::read_to_string(extension)?;
            let ext: ExtensionFile = serde_json::from_str(&text)
                .map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })?;
            let q: SkewBrace = make_brace(&ext.quotient_add, &ext.quotient_circ)?;
            let k = FiniteGroup::new(&ext.kernel)?;
            let b = rebuild_from_cocycles(&q, &k, &ext.cocycles)?;
            let doc = BraceDoc::from_brace(&format!("Ext{}", b.order()), &b).with_meta("source", "rebuild");
            write_doc(format, doc, output)
        }
    }
}

fn enumerate(format: Format, group: &str, up_to_iso: bool, output: &Path) -> Result<u8> {
    let g = resolve_group(group)?;
    let family = classify_up_to_iso(enumerate_braces_on(&g)?);
    std::fs::create_dir_all(output)?;
    let name = label(group);
    let chosen: Vec<usize> = if up_to_iso { family.iso_classes.clone() } else { (0..family.braces.len()).collect() };
    let width = chosen.len().to_string().len();
    let mut paths = Vec::new();
    for (k, &i) in chosen.iter().enumerate() {
        let brace_name = format!("{name}-{:0width$}", k + 1);
        let doc = BraceDoc::from_brace(&brace_name, &family.braces[i])
            .with_meta("group", &name)
            .with_meta("class", family.class_of[i] + 1);
        let path = output.join(format!("{brace_name}.brace"));
        doc.save(&path)?;
        paths.push(path);
    }
    let text = format!(
        "{}: {} braces, {} isomorphism classes; wrote {} files to {}\n",
        name,
        family.braces.len(),
        family.iso_classes.len(),
        paths.len(),
        output.display()
    );
    emit(
        format,
        text,
        json!({ "group": name, "braces": family.braces.len(), "classes": family.iso_classes.len(), "files": paths }),
    );
    Ok(0)
}
