//! Full structural report for one brace.

use std::fmt::Write as _;

use serde::Serialize;

use crate::brace::{verify_identities, SkewBrace};
use crate::commutator::{conjecture_on_ideals, is_abelian_brace, largest_central_ideal, PairVerdict};
use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::series::{nilpotency_report, series_of_kind, NilpotencyReport, SeriesKind, SeriesReport};
use crate::substructures::{all_ideals, distinguished_sets, is_ideal, is_left_ideal, DistinguishedSets};
use crate::ybe::{canonical_solution, summarize, YbeSummary};

/// Verdicts on three questions left open in general: whether
/// `Fix(A) ∩ ker λ` is an ideal, whether the `Γ_n(A)` are (left) ideals, and
/// whether `[I, J]` is the ideal generated by `I*J + J*I + [I,J]₊`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureVerdicts {
    pub fix_ker_lambda: ElementSet,
    pub fix_ker_lambda_is_ideal: bool,
    pub gamma_left_ideals: bool,
    pub gamma_ideals: bool,
    pub commutator_equality: bool,
    pub raw_sum_is_ideal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub name: String,
    pub order: usize,
    pub abelian_type: bool,
    pub abelian: bool,
    pub distinguished: DistinguishedSets,
    pub ideals: Vec<ElementSet>,
    pub series: Vec<SeriesReport>,
    pub nilpotency: NilpotencyReport,
    pub largest_central_ideal: ElementSet,
    pub commutators: Vec<PairVerdict>,
    pub conjectures: ConjectureVerdicts,
    pub ybe: YbeSummary,
}

/// The conjecture verdicts alone, without the series and YBE parts.
pub fn conjecture_verdicts(b: &SkewBrace) -> Result<(ConjectureVerdicts, Vec<ElementSet>, Vec<PairVerdict>)> {
    let d = distinguished_sets(b)?;
    let ideals = all_ideals(b);
    conjectures_with(b, &d, &ideals)
}

fn conjectures_with(
    b: &SkewBrace,
    d: &DistinguishedSets,
    ideals: &[ElementSet],
) -> Result<(ConjectureVerdicts, Vec<ElementSet>, Vec<PairVerdict>)> {
    let fk = d.fix.intersection(&d.ker_lambda);
    if !is_left_ideal(b, &fk) {
        return Err(Error::InternalInconsistency(format!("Fix ∩ ker λ = {fk} is not a left ideal")));
    }
    let gamma = series_of_kind(b, SeriesKind::LowerGamma)?;
    let mut gamma_left_ideals = true;
    let mut gamma_ideals = true;
    for s in &gamma.stages {
        gamma_left_ideals &= is_left_ideal(b, s);
        gamma_ideals &= is_ideal(b, s)?;
    }
    let comm = conjecture_on_ideals(b, ideals)?;
    let verdicts = ConjectureVerdicts {
        fix_ker_lambda: fk,
        fix_ker_lambda_is_ideal: is_ideal(b, &fk)?,
        gamma_left_ideals,
        gamma_ideals,
        commutator_equality: comm.all_equal,
        raw_sum_is_ideal: comm.all_raw_ideal,
    };
    Ok((verdicts, ideals.to_vec(), comm.pairs))
}

pub fn analyze(name: &str, b: &SkewBrace) -> Result<AnalysisReport> {
    let identities = verify_identities(b);
    if let Some(c) = identities.checks.iter().find(|c| !c.passed) {
        return Err(Error::InternalInconsistency(format!("identity {} fails at {:?}", c.name, c.witness)));
    }
    let distinguished = distinguished_sets(b)?;
    let ideals = all_ideals(b);
    let series = SeriesKind::ALL
        .iter()
        .map(|&k| series_of_kind(b, k))
        .collect::<Result<Vec<_>>>()?;
    let nilpotency = nilpotency_report(b)?;
    let claimed = [
        (nilpotency.centrally_nilpotent_class, &series[0]),
        (nilpotency.centrally_nilpotent_class, &series[1]),
        (nilpotency.left_star_class, &series[2]),
        (nilpotency.right_star_class, &series[3]),
        (nilpotency.mixed_star_class, &series[4]),
    ];
    for (class, s) in claimed {
        if class != s.class_index {
            return Err(Error::InternalInconsistency(format!(
                "{} series gives class {:?}, report claims {class:?}",
                s.kind, s.class_index
            )));
        }
    }
    let (conjectures, ideals, commutators) = conjectures_with(b, &distinguished, &ideals)?;
    Ok(AnalysisReport {
        name: name.to_string(),
        order: b.order(),
        abelian_type: b.is_abelian_type(),
        abelian: is_abelian_brace(b)?,
        distinguished,
        ideals,
        series,
        nilpotency,
        largest_central_ideal: largest_central_ideal(b)?,
        commutators,
        conjectures,
        ybe: summarize(&canonical_solution(b)?),
    })
}

fn class(c: Option<usize>) -> String {
    c.map_or_else(|| "none".to_string(), |c| c.to_string())
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn holds(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut o = String::new();
        let d = &self.distinguished;
        let nr = &self.nilpotency;
        let _ = writeln!(o, "brace {} (order {})", self.name, self.order);
        let _ = writeln!(o, "  abelian type: {}", yes(self.abelian_type));
        let _ = writeln!(o, "  abelian brace: {}", yes(self.abelian));
        let _ = writeln!(o, "distinguished sets");
        let _ = writeln!(o, "  Fix      {}", d.fix);
        let _ = writeln!(o, "  ker λ    {}", d.ker_lambda);
        let _ = writeln!(o, "  Soc      {}", d.soc);
        let _ = writeln!(o, "  ζ        {}", d.zeta);
        let _ = writeln!(o, "ideals ({})", self.ideals.len());
        for i in &self.ideals {
            let _ = writeln!(o, "  {i}");
        }
        let _ = writeln!(o, "series");
        for s in &self.series {
            let stages: Vec<String> = s.stages.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(
                o,
                "  {:<6} from {}: {}  class {}",
                s.kind.name(),
                s.first_index,
                stages.join(" → "),
                class(s.class_index)
            );
        }
        let _ = writeln!(o, "nilpotency");
        let _ = writeln!(o, "  centrally nilpotent class  {}", class(nr.centrally_nilpotent_class));
        let _ = writeln!(
            o,
            "  *-classes left/right/mixed {}/{}/{}",
            class(nr.left_star_class),
            class(nr.right_star_class),
            class(nr.mixed_star_class)
        );
        let _ = writeln!(
            o,
            "  group classes +/∘          {}/{}",
            class(nr.add_group_class),
            class(nr.circ_group_class)
        );
        let [a, b, c] = nr.finite_case;
        let _ = writeln!(o, "  finite-case conditions     {} {} {}", yes(a), yes(b), yes(c));
        let _ = writeln!(o, "  largest central ideal      {}", self.largest_central_ideal);
        let _ = writeln!(o, "commutators [I, J] (lower bound, equal, raw sum is ideal)");
        for p in &self.commutators {
            let _ = writeln!(
                o,
                "  [{}, {}] = {}  lower {}  {}  {}",
                p.left,
                p.right,
                p.upper,
                p.lower,
                if p.equal { "=" } else { "≠" },
                yes(p.raw_is_ideal)
            );
        }
        let c = &self.conjectures;
        let _ = writeln!(o, "open questions");
        let _ = writeln!(o, "  Fix ∩ ker λ = {} is an ideal: {}", c.fix_ker_lambda, holds(c.fix_ker_lambda_is_ideal));
        let _ = writeln!(o, "  Γ_n are left ideals: {}", holds(c.gamma_left_ideals));
        let _ = writeln!(o, "  Γ_n are ideals: {}", holds(c.gamma_ideals));
        let _ = writeln!(o, "  [I,J] generated by I*J + J*I + [I,J]₊: {}", holds(c.commutator_equality));
        let _ = writeln!(o, "  I*J + J*I + [I,J]₊ already an ideal: {}", holds(c.raw_sum_is_ideal));
        let y = &self.ybe;
        let _ = writeln!(
            o,
            "canonical solution: braid relation {}, non-degenerate {}, involutive {}",
            yes(y.holds),
            yes(y.nondegenerate),
            yes(y.involutive)
        );
        o
    }
}
