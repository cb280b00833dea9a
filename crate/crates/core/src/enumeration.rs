//! All skew brace structures on a fixed additive group, found by searching
//! for maps `λ: A → Aut(A,+)` with `λ_0 = id` and
//! `λ_{x + λ_x(y)} = λ_x λ_y`; each solution defines `x ∘ y = x + λ_x(y)`.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::brace::SkewBrace;
use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::isomorphism::{braces_isomorphic, invariant};

pub const MAX_AUTOMORPHISM_ORDER: usize = 12;
pub const MAX_ENUMERATION_ORDER: usize = 8;

/// Greedy generating set.
fn group_generators(g: &FiniteGroup) -> Vec<usize> {
    let n = g.order();
    let mut order: Vec<usize> = (1..n).collect();
    order.sort_by_key(|&x| (std::cmp::Reverse(g.element_order(x)), x));
    let mut gens = Vec::new();
    let mut span = ElementSet::zero(n);
    for x in order {
        if span.is_full() {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            let mut s = span;
            s.insert(x);
            span = g.subgroup_closure(&s);
        }
    }
    gens
}

/// Extends `map` (partial, `usize::MAX` = unset) to the subgroup generated by
/// its domain; `None` if the extension is not a well-defined injective map.
fn extend_hom(g: &FiniteGroup, mut map: Vec<usize>) -> Option<Vec<usize>> {
    let n = g.order();
    let mut used = vec![false; n];
    let mut domain = Vec::new();
    for (x, &y) in map.iter().enumerate() {
        if y != usize::MAX {
            if std::mem::replace(&mut used[y], true) {
                return None;
            }
            domain.push(x);
        }
    }
    let mut i = 0;
    while i < domain.len() {
        let x = domain[i];
        for j in 0..=i {
            let y = domain[j];
            for (p, q) in [(x, y), (y, x)] {
                let (z, w) = (g.op(p, q), g.op(map[p], map[q]));
                if map[z] == usize::MAX {
                    if std::mem::replace(&mut used[w], true) {
                        return None;
                    }
                    map[z] = w;
                    domain.push(z);
                } else if map[z] != w {
                    return None;
                }
            }
        }
        i += 1;
    }
    Some(map)
}

/// Every automorphism of `g` as `perm[x]`, sorted lexicographically; the
/// identity comes first.
pub fn automorphisms(g: &FiniteGroup) -> Result<Vec<Vec<usize>>> {
    automorphisms_with_limit(g, MAX_AUTOMORPHISM_ORDER)
}

pub fn automorphisms_with_limit(g: &FiniteGroup, max_order: usize) -> Result<Vec<Vec<usize>>> {
    let n = g.order();
    if n > max_order {
        return Err(Error::TooLarge { order: n, max: max_order });
    }
    let gens = group_generators(g);
    let mut out = Vec::new();
    let mut start = vec![usize::MAX; n];
    start[0] = 0;
    search_automorphisms(g, &gens, start, &mut out);
    out.sort();
    Ok(out)
}

fn search_automorphisms(g: &FiniteGroup, gens: &[usize], map: Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let Some(map) = extend_hom(g, map) else { return };
    let Some((&x, rest)) = gens.split_first() else {
        if map.iter().all(|&v| v != usize::MAX) {
            out.push(map);
        }
        return;
    };
    if map[x] != usize::MAX {
        search_automorphisms(g, rest, map, out);
        return;
    }
    let ord = g.element_order(x);
    for y in 0..g.order() {
        if g.element_order(y) == ord && !map.contains(&y) {
            let mut next = map.clone();
            next[x] = y;
            search_automorphisms(g, rest, next, out);
        }
    }
}

/// Braces on one additive group with their isomorphism classes.
#[derive(Debug, Clone)]
pub struct BraceFamily {
    pub base_group: FiniteGroup,
    /// Sorted by `∘` table.
    pub braces: Vec<SkewBrace>,
    /// Index of the representative of each class, increasing.
    pub iso_classes: Vec<usize>,
    /// Class number of every brace; empty until classified.
    pub class_of: Vec<usize>,
}

struct LambdaSearch<'a> {
    g: &'a FiniteGroup,
    auts: Vec<Vec<usize>>,
    /// `compose[i][j]` is the index of `auts[i] ∘ auts[j]`.
    compose: Vec<Vec<usize>>,
}

const UNSET: usize = usize::MAX;

impl LambdaSearch<'_> {
    /// Assigns `lam[x] = a` and propagates the functional equation.
    fn assign(&self, lam: &mut [usize], x: usize, a: usize) -> bool {
        let n = self.g.order();
        let mut pending = vec![(x, a)];
        while let Some((x, a)) = pending.pop() {
            if lam[x] != UNSET {
                if lam[x] != a {
                    return false;
                }
                continue;
            }
            lam[x] = a;
            for y in 0..n {
                let b = lam[y];
                if b == UNSET {
                    continue;
                }
                // x ∘ y and y ∘ x
                let xy = self.g.op(x, self.auts[a][y]);
                pending.push((xy, self.compose[a][b]));
                let yx = self.g.op(y, self.auts[b][x]);
                pending.push((yx, self.compose[b][a]));
            }
        }
        true
    }

    fn complete(&self, lam: Vec<usize>, out: &mut Vec<Vec<usize>>) {
        match lam.iter().position(|&v| v == UNSET) {
            None => out.push(lam),
            Some(x) => {
                for a in 0..self.auts.len() {
                    let mut next = lam.clone();
                    if self.assign(&mut next, x, a) {
                        self.complete(next, out);
                    }
                }
            }
        }
    }
}

/// Every skew brace `(G, +, ∘)` with `+` the operation of `g`.
pub fn enumerate_braces_on(g: &FiniteGroup) -> Result<BraceFamily> {
    let n = g.order();
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::TooLarge { order: n, max: MAX_ENUMERATION_ORDER });
    }
    let auts = automorphisms(g)?;
    let index: HashMap<&Vec<usize>, usize> = auts.iter().enumerate().map(|(i, a)| (a, i)).collect();
    let compose: Vec<Vec<usize>> = auts
        .iter()
        .map(|p| {
            auts.iter()
                .map(|q| index[&(0..n).map(|x| p[q[x]]).collect::<Vec<_>>()])
                .collect()
        })
        .collect();
    let search = LambdaSearch { g, auts: auts.clone(), compose };
    let mut root = vec![UNSET; n];
    // auts[0] is the identity.
    if !search.assign(&mut root, 0, 0) {
        return Err(Error::InternalInconsistency("λ_0 = id is inconsistent".into()));
    }
    let first = root.iter().position(|&v| v == UNSET);
    let lambdas: Vec<Vec<usize>> = match first {
        None => vec![root],
        Some(x) => (0..auts.len())
            .into_par_iter()
            .flat_map_iter(|a| {
                let mut lam = root.clone();
                let mut out = Vec::new();
                if search.assign(&mut lam, x, a) {
                    search.complete(lam, &mut out);
                }
                out
            })
            .collect(),
    };
    let mut braces = lambdas
        .iter()
        .map(|lam| {
            let circ = FiniteGroup::from_fn(n, |x, y| g.op(x, auts[lam[x]][y]))
                .map_err(|e| Error::InternalInconsistency(format!("λ-map gives no group: {e}")))?;
            SkewBrace::new(g.clone(), circ)
                .map_err(|e| Error::InternalInconsistency(format!("λ-map gives no brace: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    braces.sort_by_key(|b| b.circ_group().flat_table().to_vec());
    braces.dedup();
    Ok(BraceFamily { base_group: g.clone(), braces, iso_classes: Vec::new(), class_of: Vec::new() })
}

/// Fills in the isomorphism classes. Each representative is the first brace
/// of its class in table order.
pub fn classify_up_to_iso(mut family: BraceFamily) -> BraceFamily {
    let invariants: Vec<_> = family.braces.iter().map(invariant).collect();
    let mut reps: Vec<usize> = Vec::new();
    let mut class_of = Vec::with_capacity(family.braces.len());
    for (i, b) in family.braces.iter().enumerate() {
        let found = reps.iter().position(|&r| {
            invariants[r] == invariants[i] && braces_isomorphic(&family.braces[r], b).is_some()
        });
        match found {
            Some(c) => class_of.push(c),
            None => {
                class_of.push(reps.len());
                reps.push(i);
            }
        }
    }
    family.iso_classes = reps;
    family.class_of = class_of;
    family
}
