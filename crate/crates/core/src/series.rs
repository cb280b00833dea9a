//! Upper and lower central series, the three `*`-series, and the
//! nilpotency decision procedures built on them.

use std::fmt;

use serde::Serialize;

use crate::brace::SkewBrace;
use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::substructures::{self, is_ideal, star_product};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    UpperZeta,
    LowerGamma,
    LeftStar,
    RightStar,
    MixedStar,
}

impl SeriesKind {
    pub const ALL: [SeriesKind; 5] = [
        SeriesKind::UpperZeta,
        SeriesKind::LowerGamma,
        SeriesKind::LeftStar,
        SeriesKind::RightStar,
        SeriesKind::MixedStar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeriesKind::UpperZeta => "zeta",
            SeriesKind::LowerGamma => "gamma",
            SeriesKind::LeftStar => "left",
            SeriesKind::RightStar => "right",
            SeriesKind::MixedStar => "mixed",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A computed series. `stages[i]` carries index `first_index + i`: the central
/// series start at `ζ_0`, `Γ_0`, the `*`-series at `A^1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    pub first_index: usize,
    pub stages: Vec<ElementSet>,
    pub stabilized: bool,
    pub class_index: Option<usize>,
}

impl SeriesReport {
    fn finish(kind: SeriesKind, first_index: usize, stages: Vec<ElementSet>, target: ElementSet) -> Self {
        let len = stages.len();
        let stabilized = len >= 2 && stages[len - 1] == stages[len - 2];
        let class_index = stages.iter().position(|s| *s == target).map(|i| i + first_index);
        SeriesReport { kind, first_index, stages, stabilized, class_index }
    }

    /// Stage with the given index; past the end the series is constant.
    pub fn stage(&self, index: usize) -> ElementSet {
        assert!(index >= self.first_index, "series starts at index {}", self.first_index);
        let i = (index - self.first_index).min(self.stages.len() - 1);
        self.stages[i]
    }

    pub fn last(&self) -> ElementSet {
        *self.stages.last().expect("series has at least one stage")
    }
}

/// Runs `next` from `start` until a stage repeats the previous one.
fn iterate(start: ElementSet, mut next: impl FnMut(&ElementSet) -> ElementSet) -> Vec<ElementSet> {
    let mut stages = vec![start];
    loop {
        let candidate = next(stages.last().unwrap());
        let done = candidate == *stages.last().unwrap();
        stages.push(candidate);
        if done {
            return stages;
        }
    }
}

/// `ζ_n(A) = {x : x*y, y*x, [x,y]₊ ∈ ζ_{n−1}(A) for all y}`.
///
/// Each stage is checked to be an ideal and each step is cross-checked against
/// the center of the quotient brace `A/ζ_n(A)`.
pub fn upper_central_series(b: &SkewBrace) -> Result<SeriesReport> {
    let n = b.order();
    let stages = iterate(ElementSet::zero(n), |prev| {
        ElementSet::filter(n, |x| {
            (0..n).all(|y| {
                prev.contains(b.star(x, y))
                    && prev.contains(b.star(y, x))
                    && prev.contains(b.add_commutator(x, y))
            })
        })
    });
    for pair in stages.windows(2) {
        let (lower, upper) = (pair[0], pair[1]);
        if !lower.is_subset(&upper) {
            return Err(Error::InternalInconsistency(format!("ζ series not ascending at {lower} → {upper}")));
        }
        if !is_ideal(b, &upper)? {
            return Err(Error::InternalInconsistency(format!("ζ stage {upper} is not an ideal")));
        }
        let (quotient, projection) = b.quotient(&lower)?;
        let zq = substructures::center(&quotient);
        let preimage = ElementSet::filter(n, |x| zq.contains(projection[x]));
        if preimage != upper {
            return Err(Error::InternalInconsistency(format!(
                "ζ stage {upper} differs from the preimage {preimage} of the quotient center"
            )));
        }
    }
    Ok(SeriesReport::finish(SeriesKind::UpperZeta, 0, stages, ElementSet::full(n)))
}

/// `Γ_0(I) = I`, `Γ_n(I) = ⟨Γ_{n−1}*A, A*Γ_{n−1}, [Γ_{n−1}, A]₊⟩₊`.
pub fn lower_central_series(b: &SkewBrace, start: &ElementSet) -> SeriesReport {
    let n = b.order();
    let all = ElementSet::full(n);
    let step = |prev: &ElementSet| {
        let mut gens = star_product(b, prev, &all).union(&star_product(b, &all, prev));
        for x in prev.iter() {
            for y in 0..n {
                gens.insert(b.add_commutator(x, y));
            }
        }
        b.add_closure(&gens)
    };
    // For an arbitrary start the sequence need not be monotone; stop at the
    // first repeat of any earlier stage.
    let mut stages = vec![*start];
    loop {
        let next = step(stages.last().unwrap());
        let repeat = stages.contains(&next);
        stages.push(next);
        if repeat {
            break;
        }
    }
    SeriesReport::finish(SeriesKind::LowerGamma, 0, stages, ElementSet::zero(n))
}

/// Left `A^{n+1} = A * A^n`, right `A^{(n+1)} = A^{(n)} * A`, and mixed
/// `A^{[n+1]} = ⟨⋃_{i=1..n} A^{[i]} * A^{[n+1−i]}⟩₊` series.
pub fn star_series(b: &SkewBrace) -> Result<(SeriesReport, SeriesReport, SeriesReport)> {
    let n = b.order();
    let all = ElementSet::full(n);
    let zero = ElementSet::zero(n);
    let left = iterate(all, |prev| star_product(b, &all, prev));
    let right = iterate(all, |prev| star_product(b, prev, &all));

    // mixed[i] holds A^{[i+1]}
    let mut mixed = vec![all];
    loop {
        let m = mixed.len();
        let mut gens = ElementSet::empty(n);
        for i in 0..m {
            gens = gens.union(&star_product(b, &mixed[i], &mixed[m - 1 - i]));
        }
        let next = b.add_closure(&gens);
        if !next.is_subset(&mixed[m - 1]) {
            return Err(Error::InternalInconsistency(format!(
                "mixed *-series not descending at index {}",
                m + 1
            )));
        }
        mixed.push(next);
        // A plateau of A^{[k]} = ... = A^{[2k]} persists forever.
        let last = mixed.len() - 1;
        let k = (0..=last).rev().take_while(|&i| mixed[i] == next).last().unwrap();
        if next == zero && last > 0 && mixed[last - 1] == zero {
            break;
        }
        if last > k && last + 1 >= 2 * (k + 1) {
            break;
        }
    }
    for stages in [&left, &right] {
        if stages.windows(2).any(|w| !w[1].is_subset(&w[0])) {
            return Err(Error::InternalInconsistency("one-sided *-series not descending".into()));
        }
    }
    Ok((
        SeriesReport::finish(SeriesKind::LeftStar, 1, left, zero),
        SeriesReport::finish(SeriesKind::RightStar, 1, right, zero),
        SeriesReport::finish(SeriesKind::MixedStar, 1, mixed, zero),
    ))
}

/// One series by kind; the lower central series starts at `A`.
pub fn series_of_kind(b: &SkewBrace, kind: SeriesKind) -> Result<SeriesReport> {
    Ok(match kind {
        SeriesKind::UpperZeta => upper_central_series(b)?,
        SeriesKind::LowerGamma => lower_central_series(b, &ElementSet::full(b.order())),
        SeriesKind::LeftStar => star_series(b)?.0,
        SeriesKind::RightStar => star_series(b)?.1,
        SeriesKind::MixedStar => star_series(b)?.2,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NilpotencyReport {
    pub centrally_nilpotent_class: Option<usize>,
    pub left_star_class: Option<usize>,
    pub right_star_class: Option<usize>,
    pub mixed_star_class: Option<usize>,
    pub add_group_class: Option<usize>,
    pub circ_group_class: Option<usize>,
    pub nilpotent_type: bool,
    pub circ_nilpotent: bool,
    /// The three equivalent conditions for finite braces: `*`-nilpotent of
    /// nilpotent type; right `*`-nilpotent of nilpotent type with `(A,∘)`
    /// nilpotent; centrally nilpotent.
    pub finite_case: [bool; 3],
}

impl NilpotencyReport {
    pub fn is_centrally_nilpotent(&self) -> bool {
        self.centrally_nilpotent_class.is_some()
    }

    pub fn is_star_nilpotent(&self) -> bool {
        self.left_star_class.is_some() && self.right_star_class.is_some()
    }
}

/// Every nilpotency invariant at once, with the equivalences between them
/// enforced; a violated equivalence is reported as an internal inconsistency.
pub fn nilpotency_report(b: &SkewBrace) -> Result<NilpotencyReport> {
    let n = b.order();
    let all = ElementSet::full(n);
    let upper = upper_central_series(b)?;
    let lower = lower_central_series(b, &all);
    let (left, right, mixed) = star_series(b)?;

    if upper.class_index != lower.class_index {
        return Err(Error::InternalInconsistency(format!(
            "class from ζ ({:?}) differs from class from Γ ({:?})",
            upper.class_index, lower.class_index
        )));
    }

    // Γ_n(A) ⊆ ζ_k(A) iff A ⊆ ζ_{n+k}(A)
    let span = upper.stages.len() + lower.stages.len();
    for gi in 0..span {
        for zk in 0..span {
            let lhs = lower.stage(gi).is_subset(&upper.stage(zk));
            let rhs = upper.stage(gi + zk).is_full();
            if lhs != rhs {
                return Err(Error::InternalInconsistency(format!(
                    "Γ_{gi} ⊆ ζ_{zk} is {lhs} but A ⊆ ζ_{} is {rhs}",
                    gi + zk
                )));
            }
        }
    }

    // A^n, A^(n) ⊆ Γ_{n−1}
    let depth = left.stages.len().max(right.stages.len()).max(lower.stages.len()) + 1;
    for k in 1..=depth {
        let gamma = lower.stage(k - 1);
        if !left.stage(k).is_subset(&gamma) || !right.stage(k).is_subset(&gamma) {
            return Err(Error::InternalInconsistency(format!("A^{k} or A^({k}) escapes Γ_{}", k - 1)));
        }
    }

    let left_class = left.class_index;
    let right_class = right.class_index;
    let mixed_class = mixed.class_index;
    if (left_class.is_some() && right_class.is_some()) != mixed_class.is_some() {
        return Err(Error::InternalInconsistency(
            "mixed *-series disagrees with the left and right series".into(),
        ));
    }

    let add_group_class = b.add_group().nilpotency_class();
    let circ_group_class = b.circ_group().nilpotency_class();
    let nilpotent_type = add_group_class.is_some();
    let circ_nilpotent = circ_group_class.is_some();
    let centrally = upper.class_index;

    let finite_case = [
        left_class.is_some() && right_class.is_some() && nilpotent_type,
        right_class.is_some() && nilpotent_type && circ_nilpotent,
        centrally.is_some(),
    ];
    if finite_case[0] != finite_case[1] || finite_case[1] != finite_case[2] {
        return Err(Error::InternalInconsistency(format!(
            "finite-case nilpotency conditions disagree: {finite_case:?}"
        )));
    }
    if centrally.is_some() && !(nilpotent_type && circ_nilpotent && mixed_class.is_some()) {
        return Err(Error::InternalInconsistency(
            "centrally nilpotent brace without nilpotent groups or *-nilpotency".into(),
        ));
    }

    Ok(NilpotencyReport {
        centrally_nilpotent_class: centrally,
        left_star_class: left_class,
        right_star_class: right_class,
        mixed_star_class: mixed_class,
        add_group_class,
        circ_group_class,
        nilpotent_type,
        circ_nilpotent,
        finite_case,
    })
}

/// For braces of abelian type: `*`-nilpotent, right `*`-nilpotent with
/// `(A,∘)` nilpotent, and centrally nilpotent. `None` unless abelian type.
pub fn abelian_type_conditions(b: &SkewBrace, report: &NilpotencyReport) -> Option<[bool; 3]> {
    b.is_abelian_type().then(|| {
        [
            report.mixed_star_class.is_some(),
            report.right_star_class.is_some() && report.circ_nilpotent,
            report.is_centrally_nilpotent(),
        ]
    })
}

/// For `*`-nilpotent braces of nilpotent type, every nonzero ideal meets the
/// center nontrivially. Returns whether the hypothesis applied.
pub fn check_center_meets_ideals(b: &SkewBrace, report: &NilpotencyReport, ideals: &[ElementSet]) -> Result<bool> {
    if !(report.is_star_nilpotent() && report.nilpotent_type) {
        return Ok(false);
    }
    let zeta = substructures::center(b);
    if let Some(bad) = ideals.iter().find(|i| !i.is_trivial() && zeta.intersection(i).is_trivial()) {
        return Err(Error::InternalInconsistency(format!(
            "nonzero ideal {bad} meets the center trivially"
        )));
    }
    Ok(true)
}
