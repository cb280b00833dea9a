//! Distinguished subsets, left ideals, ideals and `*`-products of subsets.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::brace::SkewBrace;
use crate::elements::ElementSet;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DistinguishedSets {
    pub fix: ElementSet,
    pub ker_lambda: ElementSet,
    pub soc: ElementSet,
    pub zeta: ElementSet,
}

pub fn fix(b: &SkewBrace) -> ElementSet {
    let n = b.order();
    ElementSet::filter(n, |x| (0..n).all(|y| b.lambda(y, x) == x))
}

pub fn ker_lambda(b: &SkewBrace) -> ElementSet {
    let n = b.order();
    ElementSet::filter(n, |x| (0..n).all(|y| b.lambda(x, y) == y))
}

pub fn socle(b: &SkewBrace) -> ElementSet {
    ker_lambda(b).intersection(&b.add_group().center())
}

/// `ζ(A) = Soc(A) ∩ Fix(A)`.
pub fn center(b: &SkewBrace) -> ElementSet {
    socle(b).intersection(&fix(b))
}

/// The four distinguished left ideals. The center is computed twice, once as
/// `Soc ∩ Fix` and once element-wise, and the results must agree.
pub fn distinguished_sets(b: &SkewBrace) -> Result<DistinguishedSets> {
    let n = b.order();
    let fix = fix(b);
    let ker_lambda = ker_lambda(b);
    let soc = ker_lambda.intersection(&b.add_group().center());
    let zeta = soc.intersection(&fix);
    let by_star = ElementSet::filter(n, |x| {
        (0..n).all(|y| b.star(x, y) == 0 && b.star(y, x) == 0 && b.add_commutator(x, y) == 0)
    });
    let by_ops = ElementSet::filter(n, |x| {
        (0..n).all(|y| {
            let s = b.add(x, y);
            s == b.add(y, x) && s == b.circ(x, y) && s == b.circ(y, x)
        })
    });
    if by_star != zeta || by_ops != zeta {
        return Err(Error::InternalInconsistency(format!(
            "center mismatch: Soc∩Fix = {zeta}, element-wise = {by_star}, by operations = {by_ops}"
        )));
    }
    Ok(DistinguishedSets { fix, ker_lambda, soc, zeta })
}

/// Additive subgroup stable under every `λ_x`, `x ∈ A`.
pub fn is_left_ideal(b: &SkewBrace, s: &ElementSet) -> bool {
    b.add_group().is_subgroup(s) && is_lambda_stable(b, s)
}

fn is_lambda_stable(b: &SkewBrace, s: &ElementSet) -> bool {
    (0..b.order()).all(|x| s.iter().all(|y| s.contains(b.lambda(x, y))))
}

/// Ideal test, evaluated both directly (normal in both groups and
/// `λ`-stable) and through `I*A + A*I ⊆ I`. The two must agree.
pub fn is_ideal(b: &SkewBrace, s: &ElementSet) -> Result<bool> {
    let n = b.order();
    let add_normal = b.add_group().is_subgroup(s) && b.add_group().is_normal_unchecked(s);
    let direct = add_normal
        && is_lambda_stable(b, s)
        && b.circ_group().is_subgroup(s)
        && b.circ_group().is_normal_unchecked(s);
    let bracket = add_normal
        && s.iter().all(|i| (0..n).all(|a| s.contains(b.star(i, a)) && s.contains(b.star(a, i))));
    if direct != bracket {
        return Err(Error::InternalInconsistency(format!(
            "ideal criteria disagree on {s}: direct {direct}, bracket {bracket}"
        )));
    }
    Ok(direct)
}

/// `I * J = ⟨i*j : i ∈ I, j ∈ J⟩₊`.
pub fn star_product(b: &SkewBrace, i: &ElementSet, j: &ElementSet) -> ElementSet {
    let mut gens = ElementSet::empty(b.order());
    for x in i.iter() {
        for y in j.iter() {
            gens.insert(b.star(x, y));
        }
    }
    b.add_closure(&gens)
}

/// `⟨S ∪ T⟩₊`.
pub fn sum_of_left_ideals(b: &SkewBrace, s: &ElementSet, t: &ElementSet) -> ElementSet {
    b.add_closure(&s.union(t))
}

/// The element-wise sum set `{s + t : s ∈ S, t ∈ T}`.
pub fn sum_set(b: &SkewBrace, s: &ElementSet, t: &ElementSet) -> ElementSet {
    let mut out = ElementSet::empty(b.order());
    for x in s.iter() {
        for y in t.iter() {
            out.insert(b.add(x, y));
        }
    }
    out
}

/// `I*J + J*I` for ideals `I`, `J`. The element-wise sum of the two star
/// products is already a subgroup; this is checked against the closure.
pub fn symmetric_star_sum(b: &SkewBrace, i: &ElementSet, j: &ElementSet) -> Result<ElementSet> {
    let ij = star_product(b, i, j);
    let ji = star_product(b, j, i);
    let closed = sum_of_left_ideals(b, &ij, &ji);
    let raw = sum_set(b, &ij, &ji);
    if raw != closed {
        return Err(Error::InternalInconsistency(format!(
            "I*J + J*I = {raw} is not the subgroup {closed}"
        )));
    }
    Ok(closed)
}

/// Least ideal containing `s`.
pub fn ideal_closure(b: &SkewBrace, s: &ElementSet) -> ElementSet {
    let n = b.order();
    let add = b.add_group();
    let circ = b.circ_group();
    let mut current = b.add_closure(s);
    loop {
        let mut next = current;
        for x in 0..n {
            for y in current.iter() {
                next.insert(add.conjugate(x, y));
                next.insert(circ.conjugate(x, y));
                next.insert(b.lambda(x, y));
            }
        }
        let next = b.add_closure(&next);
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Every ideal, ordered by size and then by members.
///
/// Every ideal is the join of the principal ideals of its members, so the
/// principal ideals closed under pairwise joins give the whole lattice.
pub fn all_ideals(b: &SkewBrace) -> Vec<ElementSet> {
    let n = b.order();
    let mut found: BTreeSet<ElementSet> = (0..n)
        .map(|x| ideal_closure(b, &ElementSet::from_members(n, [x])))
        .collect();
    let mut frontier: Vec<ElementSet> = found.iter().copied().collect();
    while !frontier.is_empty() {
        let snapshot: Vec<ElementSet> = found.iter().copied().collect();
        let mut fresh = Vec::new();
        for f in &frontier {
            for s in &snapshot {
                let join = ideal_closure(b, &f.union(s));
                if !found.contains(&join) {
                    found.insert(join);
                    fresh.push(join);
                }
            }
        }
        frontier = fresh;
    }
    let mut ideals: Vec<ElementSet> = found.into_iter().collect();
    ideals.sort_by_key(|s| (s.len(), s.members()));
    ideals
}
