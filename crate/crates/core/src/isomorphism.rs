//! Isomorphism search between finite skew braces.

use crate::brace::SkewBrace;
use crate::elements::ElementSet;

/// Isomorphism-invariant data attached to each element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Signature {
    add_order: usize,
    circ_order: usize,
    lambda_fixed_points: usize,
    fixed_by: usize,
    add_centralizer: usize,
    circ_centralizer: usize,
}

fn signatures(b: &SkewBrace) -> Vec<Signature> {
    let n = b.order();
    (0..n)
        .map(|x| Signature {
            add_order: b.add_group().element_order(x),
            circ_order: b.circ_group().element_order(x),
            lambda_fixed_points: (0..n).filter(|&y| b.lambda(x, y) == y).count(),
            fixed_by: (0..n).filter(|&y| b.lambda(y, x) == x).count(),
            add_centralizer: (0..n).filter(|&y| b.add(x, y) == b.add(y, x)).count(),
            circ_centralizer: (0..n).filter(|&y| b.circ(x, y) == b.circ(y, x)).count(),
        })
        .collect()
}

/// Sorted signature multiset; equal for isomorphic braces.
pub fn invariant(b: &SkewBrace) -> Vec<(usize, usize, usize, usize, usize, usize)> {
    let mut sig: Vec<_> = signatures(b)
        .into_iter()
        .map(|s| {
            (s.add_order, s.circ_order, s.lambda_fixed_points, s.fixed_by, s.add_centralizer, s.circ_centralizer)
        })
        .collect();
    sig.sort_unstable();
    sig
}

/// Closure of a set under `+` and `∘`.
fn brace_closure(b: &SkewBrace, s: &ElementSet) -> ElementSet {
    let mut out = *s;
    out.insert(0);
    loop {
        let mut next = out;
        for x in out.iter() {
            for y in out.iter() {
                next.insert(b.add(x, y));
                next.insert(b.circ(x, y));
            }
        }
        if next == out {
            return out;
        }
        out = next;
    }
}

/// Greedy generating sequence for `b` under `+` and `∘`, rarest signatures first.
fn generators(b: &SkewBrace, sig: &[Signature]) -> Vec<usize> {
    let n = b.order();
    let mut count = std::collections::HashMap::new();
    for s in sig {
        *count.entry(*s).or_insert(0usize) += 1;
    }
    let mut candidates: Vec<usize> = (1..n).collect();
    candidates.sort_by_key(|&x| (count[&sig[x]], std::cmp::Reverse(sig[x].add_order), x));
    let mut gens = Vec::new();
    let mut span = ElementSet::zero(n);
    for x in candidates {
        if span.is_full() {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            let mut s = span;
            s.insert(x);
            span = brace_closure(b, &s);
        }
    }
    gens
}

struct Search<'a> {
    b1: &'a SkewBrace,
    b2: &'a SkewBrace,
    sig1: Vec<Signature>,
    sig2: Vec<Signature>,
    gens: Vec<usize>,
}

const UNSET: usize = usize::MAX;

impl Search<'_> {
    /// Sets `map[x] = y` and extends along `+` and `∘`; false on conflict.
    fn extend(&self, map: &mut [usize], inverse: &mut [usize], domain: &mut Vec<usize>, x: usize, y: usize) -> bool {
        let mut pending = vec![(x, y)];
        while let Some((x, y)) = pending.pop() {
            if map[x] != UNSET {
                if map[x] != y {
                    return false;
                }
                continue;
            }
            if inverse[y] != UNSET || self.sig1[x] != self.sig2[y] {
                return false;
            }
            map[x] = y;
            inverse[y] = x;
            domain.push(x);
            for i in 0..domain.len() {
                let u = domain[i];
                let v = map[u];
                pending.push((self.b1.add(x, u), self.b2.add(y, v)));
                pending.push((self.b1.add(u, x), self.b2.add(v, y)));
                pending.push((self.b1.circ(x, u), self.b2.circ(y, v)));
                pending.push((self.b1.circ(u, x), self.b2.circ(v, y)));
            }
        }
        true
    }

    fn run(&self, level: usize, map: &mut Vec<usize>, inverse: &mut Vec<usize>, domain: &mut Vec<usize>) -> bool {
        if level == self.gens.len() {
            return domain.len() == map.len();
        }
        let g = self.gens[level];
        if map[g] != UNSET {
            return self.run(level + 1, map, inverse, domain);
        }
        let n = map.len();
        for y in 0..n {
            if inverse[y] != UNSET || self.sig1[g] != self.sig2[y] {
                continue;
            }
            let (saved_map, saved_inverse, saved_len) = (map.clone(), inverse.clone(), domain.len());
            if self.extend(map, inverse, domain, g, y) && self.run(level + 1, map, inverse, domain) {
                return true;
            }
            *map = saved_map;
            *inverse = saved_inverse;
            domain.truncate(saved_len);
        }
        false
    }
}

/// A bijection `f` with `f(x + y) = f(x) + f(y)` and `f(x ∘ y) = f(x) ∘ f(y)`,
/// as `f[x]`, if one exists.
pub fn braces_isomorphic(b1: &SkewBrace, b2: &SkewBrace) -> Option<Vec<usize>> {
    let n = b1.order();
    if b2.order() != n {
        return None;
    }
    let sig1 = signatures(b1);
    let sig2 = signatures(b2);
    let mut s1 = sig1.clone();
    let mut s2 = sig2.clone();
    s1.sort_unstable();
    s2.sort_unstable();
    if s1 != s2 {
        return None;
    }
    let search = Search { b1, b2, gens: generators(b1, &sig1), sig1, sig2 };
    let mut map = vec![UNSET; n];
    let mut inverse = vec![UNSET; n];
    let mut domain = Vec::with_capacity(n);
    if !search.extend(&mut map, &mut inverse, &mut domain, 0, 0) {
        return None;
    }
    if !search.run(0, &mut map, &mut inverse, &mut domain) {
        return None;
    }
    debug_assert!(is_isomorphism(b1, b2, &map));
    Some(map)
}

/// Whether `f` is a bijection preserving both operations.
pub fn is_isomorphism(b1: &SkewBrace, b2: &SkewBrace, f: &[usize]) -> bool {
    let n = b1.order();
    if b2.order() != n || f.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &y in f {
        if y >= n || std::mem::replace(&mut seen[y], true) {
            return false;
        }
    }
    (0..n).all(|x| {
        (0..n).all(|y| f[b1.add(x, y)] == b2.add(f[x], f[y]) && f[b1.circ(x, y)] == b2.circ(f[x], f[y]))
    })
}
