//! The commutator of ideals in the sense of commutator theory, computed on
//! the algebra of pairs, together with centrality and abelianness tests.
//!
//! For ideals `I`, `J` let `A(J) = {(x, y) : −x + y ∈ J}`, a subbrace of
//! `A × A`, and let `Δ` be the congruence of `A(J)` generated by the pairs
//! `((a, a), (b, b))` with `−a + b ∈ I`. Then
//! `[I, J] = {−y + x : (x, y) Δ (y, y)}`.

use std::collections::HashSet;

use serde::Serialize;

use crate::brace::SkewBrace;
use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::substructures::{self, ideal_closure, is_ideal, star_product, sum_set};

/// A finite algebra presented by its basic operations.
pub trait Operations {
    fn size(&self) -> usize;
    fn binary_arity(&self) -> usize;
    fn binary(&self, op: usize, a: usize, b: usize) -> usize;
    fn unary_arity(&self) -> usize;
    fn unary(&self, op: usize, a: usize) -> usize;
}

/// `+` and `∘`; `−` and `bar`.
impl Operations for SkewBrace {
    fn size(&self) -> usize {
        self.order()
    }

    fn binary_arity(&self) -> usize {
        2
    }

    fn binary(&self, op: usize, a: usize, b: usize) -> usize {
        if op == 0 {
            self.add(a, b)
        } else {
            self.circ(a, b)
        }
    }

    fn unary_arity(&self) -> usize {
        2
    }

    fn unary(&self, op: usize, a: usize) -> usize {
        if op == 0 {
            self.neg(a)
        } else {
            self.bar(a)
        }
    }
}

/// An equivalence relation on `0..len`, one class id per element. Class ids
/// are numbered by first occurrence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    class: Vec<usize>,
}

impl Partition {
    pub fn discrete(len: usize) -> Self {
        Partition { class: (0..len).collect() }
    }

    fn from_roots(roots: Vec<usize>) -> Self {
        let mut ids = vec![usize::MAX; roots.len()];
        let mut next = 0;
        let class = roots
            .iter()
            .map(|&r| {
                if ids[r] == usize::MAX {
                    ids[r] = next;
                    next += 1;
                }
                ids[r]
            })
            .collect();
        Partition { class }
    }

    pub fn len(&self) -> usize {
        self.class.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class.is_empty()
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class[a]
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class[a] == self.class[b]
    }

    pub fn class_count(&self) -> usize {
        self.class.iter().max().map_or(0, |m| m + 1)
    }

    /// Members of each class, classes in order of first occurrence.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.class_count()];
        for (a, &c) in self.class.iter().enumerate() {
            out[c].push(a);
        }
        out
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(len: usize) -> Self {
        UnionFind { parent: (0..len).collect() }
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// Least congruence containing `pairs`.
///
/// Only the edges that actually merged two classes are propagated: every
/// pair of the generated equivalence is connected by such edges, and the
/// unary translations map edges to related pairs.
pub fn congruence_generated<A: Operations + ?Sized>(alg: &A, pairs: &[(usize, usize)]) -> Partition {
    let len = alg.size();
    let mut uf = UnionFind::new(len);
    let mut queue: Vec<(usize, usize)> = pairs.iter().copied().filter(|&(a, b)| uf.union(a, b)).collect();
    while let Some((u, v)) = queue.pop() {
        for op in 0..alg.unary_arity() {
            let (fu, fv) = (alg.unary(op, u), alg.unary(op, v));
            if uf.union(fu, fv) {
                queue.push((fu, fv));
            }
        }
        for op in 0..alg.binary_arity() {
            for c in 0..len {
                let (l, r) = (alg.binary(op, u, c), alg.binary(op, v, c));
                if uf.union(l, r) {
                    queue.push((l, r));
                }
                let (l, r) = (alg.binary(op, c, u), alg.binary(op, c, v));
                if uf.union(l, r) {
                    queue.push((l, r));
                }
            }
        }
    }
    let roots = (0..len).map(|a| uf.find(a)).collect();
    Partition::from_roots(roots)
}

/// Whether `p` is compatible with every basic operation of `alg`.
pub fn is_congruence<A: Operations + ?Sized>(alg: &A, p: &Partition) -> bool {
    let len = alg.size();
    let reps: Vec<usize> = p.classes().iter().map(|c| c[0]).collect();
    (0..len).all(|u| {
        let v = reps[p.class_of(u)];
        (0..alg.unary_arity()).all(|op| p.related(alg.unary(op, u), alg.unary(op, v)))
            && (0..alg.binary_arity()).all(|op| {
                (0..len).all(|c| {
                    p.related(alg.binary(op, u, c), alg.binary(op, v, c))
                        && p.related(alg.binary(op, c, u), alg.binary(op, c, v))
                })
            })
    })
}

/// The congruence `{(x, y) : −x + y ∈ I}` of a brace.
pub fn ideal_partition(b: &SkewBrace, ideal: &ElementSet) -> Partition {
    let projection = crate::group::coset_projection(b.order(), |a, m| b.add(a, m), ideal);
    Partition { class: projection }
}

/// The subbrace `{(x, y) : −x + y ∈ J}` of `A × A`, componentwise operations.
pub struct PairAlgebra<'a> {
    brace: &'a SkewBrace,
    pairs: Vec<(usize, usize)>,
    index: Vec<usize>,
}

impl<'a> PairAlgebra<'a> {
    pub fn new(brace: &'a SkewBrace, j: &ElementSet) -> Result<Self> {
        if !is_ideal(brace, j)? {
            return Err(Error::NotAnIdeal);
        }
        let n = brace.order();
        let mut pairs = Vec::with_capacity(n * j.len());
        let mut index = vec![usize::MAX; n * n];
        for x in 0..n {
            for y in 0..n {
                if j.contains(brace.add(brace.neg(x), y)) {
                    index[x * n + y] = pairs.len();
                    pairs.push((x, y));
                }
            }
        }
        if !is_congruence(brace, &ideal_partition(brace, j)) {
            return Err(Error::InternalInconsistency(format!("cosets of the ideal {j} are not a congruence")));
        }
        let alg = PairAlgebra { brace, pairs, index };
        alg.check_closed()?;
        Ok(alg)
    }

    fn check_closed(&self) -> Result<()> {
        let n = self.brace.order();
        let inside = |x: usize, y: usize| self.index[x * n + y] != usize::MAX;
        let b = self.brace;
        for &(x1, y1) in &self.pairs {
            if !inside(b.neg(x1), b.neg(y1)) || !inside(b.bar(x1), b.bar(y1)) {
                return Err(Error::InternalInconsistency("pair algebra not closed under inverses".into()));
            }
            for &(x2, y2) in &self.pairs {
                if !inside(b.add(x1, x2), b.add(y1, y2)) || !inside(b.circ(x1, x2), b.circ(y1, y2)) {
                    return Err(Error::InternalInconsistency("pair algebra not closed".into()));
                }
            }
        }
        Ok(())
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Position of `(x, y)` in the universe.
    pub fn index_of(&self, x: usize, y: usize) -> Option<usize> {
        let i = self.index[x * self.brace.order() + y];
        (i != usize::MAX).then_some(i)
    }

    #[inline]
    fn at(&self, x: usize, y: usize) -> usize {
        self.index[x * self.brace.order() + y]
    }

    #[inline]
    fn lift2(&self, p: usize, q: usize, f: impl Fn(usize, usize) -> usize) -> usize {
        let (x1, y1) = self.pairs[p];
        let (x2, y2) = self.pairs[q];
        self.at(f(x1, x2), f(y1, y2))
    }

    /// Ideal of the pair brace generated by `gens`, as a membership mask.
    fn ideal_generated(&self, gens: &[usize]) -> Vec<bool> {
        let b = self.brace;
        let len = self.pairs.len();
        let mut member = vec![false; len];
        let mut members = Vec::new();
        let mut queue = vec![0];
        queue.extend_from_slice(gens);
        while let Some(d) = queue.pop() {
            if member[d] {
                continue;
            }
            member[d] = true;
            for &e in &members {
                queue.push(self.lift2(d, e, |p, q| b.add(p, q)));
                queue.push(self.lift2(e, d, |p, q| b.add(p, q)));
            }
            queue.push(self.lift2(d, d, |p, q| b.add(p, q)));
            members.push(d);
            let (dx, dy) = self.pairs[d];
            for &(px, py) in &self.pairs {
                let add_conj = (b.add(b.add(px, dx), b.neg(px)), b.add(b.add(py, dy), b.neg(py)));
                let circ_conj = (b.circ(b.circ(px, dx), b.bar(px)), b.circ(b.circ(py, dy), b.bar(py)));
                let lam = (b.lambda(px, dx), b.lambda(py, dy));
                for (x, y) in [add_conj, circ_conj, lam] {
                    let i = self.at(x, y);
                    if !member[i] {
                        queue.push(i);
                    }
                }
            }
        }
        member
    }
}

impl Operations for PairAlgebra<'_> {
    fn size(&self) -> usize {
        self.pairs.len()
    }

    fn binary_arity(&self) -> usize {
        2
    }

    fn binary(&self, op: usize, a: usize, b: usize) -> usize {
        let br = self.brace;
        if op == 0 {
            self.lift2(a, b, |p, q| br.add(p, q))
        } else {
            self.lift2(a, b, |p, q| br.circ(p, q))
        }
    }

    fn unary_arity(&self) -> usize {
        2
    }

    fn unary(&self, op: usize, a: usize) -> usize {
        let (x, y) = self.pairs[a];
        let br = self.brace;
        if op == 0 {
            self.at(br.neg(x), br.neg(y))
        } else {
            self.at(br.bar(x), br.bar(y))
        }
    }
}

/// How `Δ` is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaMethod {
    /// Generic congruence generation by union-find on the pair algebra.
    Congruence,
    /// The `0`-class of `Δ` as the ideal of the pair brace generated by the
    /// differences of the generating pairs.
    IdealOfPairs,
}

/// `[I, J]` from the `Δ`-construction, without ideal or symmetry checks.
pub fn delta_commutator(b: &SkewBrace, i: &ElementSet, j: &ElementSet, method: DeltaMethod) -> Result<ElementSet> {
    if !is_ideal(b, i)? {
        return Err(Error::NotAnIdeal);
    }
    let alg = PairAlgebra::new(b, j)?;
    let n = b.order();
    let mut out = ElementSet::empty(n);
    match method {
        DeltaMethod::Congruence => {
            let mut gens = Vec::new();
            for a in 0..n {
                for c in 0..n {
                    if i.contains(b.add(b.neg(a), c)) {
                        gens.push((alg.at(a, a), alg.at(c, c)));
                    }
                }
            }
            let delta = congruence_generated(&alg, &gens);
            for (p, &(x, y)) in alg.pairs.iter().enumerate() {
                if delta.related(p, alg.at(y, y)) {
                    out.insert(b.add(b.neg(y), x));
                }
            }
        }
        DeltaMethod::IdealOfPairs => {
            // −(a,a) + (c,c) = (−a+c, −a+c): the diagonal of I.
            let gens: Vec<usize> = i.iter().map(|d| alg.at(d, d)).collect();
            let zero_class = alg.ideal_generated(&gens);
            for k in j.iter() {
                if zero_class[alg.at(k, 0)] {
                    out.insert(k);
                }
            }
        }
    }
    Ok(out)
}

/// The commutator `[I, J]` of two ideals. The result is checked to be an
/// ideal inside `I ∩ J` and to be symmetric in `I`, `J`.
pub fn smith_commutator(b: &SkewBrace, i: &ElementSet, j: &ElementSet) -> Result<ElementSet> {
    let ij = delta_commutator(b, i, j, DeltaMethod::IdealOfPairs)?;
    let ji = delta_commutator(b, j, i, DeltaMethod::IdealOfPairs)?;
    if ij != ji {
        return Err(Error::InternalInconsistency(format!("[I,J] = {ij} but [J,I] = {ji}")));
    }
    if !is_ideal(b, &ij)? || !ij.is_subset(&i.intersection(j)) {
        return Err(Error::InternalInconsistency(format!("commutator {ij} is not an ideal inside I ∩ J")));
    }
    Ok(ij)
}

/// `[A, I] = 0`.
pub fn is_central_ideal(b: &SkewBrace, ideal: &ElementSet) -> Result<bool> {
    Ok(smith_commutator(b, &ElementSet::full(b.order()), ideal)?.is_trivial())
}

/// Abelian in the commutator sense; the two elementary characterizations
/// (`(A,+) = (A,∘)` abelian, and `A*A = [A,A]₊ = 0`) must agree.
pub fn is_abelian_brace(b: &SkewBrace) -> Result<bool> {
    let n = b.order();
    let all = ElementSet::full(n);
    let by_commutator = smith_commutator(b, &all, &all)?.is_trivial();
    let same_groups = b.add_group() == b.circ_group() && b.is_abelian_type();
    let by_products = star_product(b, &all, &all).is_trivial() && b.add_group().commutator_set(&all, &all).is_trivial();
    if by_commutator != same_groups || same_groups != by_products {
        return Err(Error::InternalInconsistency(format!(
            "abelianness criteria disagree: commutator {by_commutator}, groups {same_groups}, products {by_products}"
        )));
    }
    Ok(by_commutator)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbsorbingBound {
    pub set: ElementSet,
    pub functions: usize,
    pub absorbing: usize,
    pub cap_reached: bool,
}

/// Ideal generated by `f(i, j)` over absorbing binary polynomials `f` found by
/// closing projections, constants, `x*y`, `y*x` and `[x,y]₊` under pointwise
/// `+`, `−`, `∘`, `bar`, until `cap` functions exist. A lower bound for
/// [`smith_commutator`].
pub fn absorbing_lower_bound(b: &SkewBrace, i: &ElementSet, j: &ElementSet, cap: usize) -> AbsorbingBound {
    let n = b.order();
    let table = |f: &dyn Fn(usize, usize) -> usize| -> Vec<u8> {
        (0..n * n).map(|k| f(k / n, k % n) as u8).collect()
    };
    let mut seeds = vec![
        table(&|x, _| x),
        table(&|_, y| y),
        table(&|x, y| b.star(x, y)),
        table(&|x, y| b.star(y, x)),
        table(&|x, y| b.add_commutator(x, y)),
    ];
    seeds.extend((0..n).map(|c| vec![c as u8; n * n]));

    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut funcs: Vec<Vec<u8>> = Vec::new();
    let mut push = |f: Vec<u8>, funcs: &mut Vec<Vec<u8>>| {
        if funcs.len() < cap && seen.insert(f.clone()) {
            funcs.push(f);
        }
    };
    for s in seeds {
        push(s, &mut funcs);
    }
    let pointwise = |f: &[u8], g: &[u8], op: &dyn Fn(usize, usize) -> usize| -> Vec<u8> {
        f.iter().zip(g).map(|(&a, &c)| op(a as usize, c as usize) as u8).collect()
    };
    let mut next = 0;
    while next < funcs.len() && funcs.len() < cap {
        let f = funcs[next].clone();
        push(f.iter().map(|&a| b.neg(a as usize) as u8).collect(), &mut funcs);
        push(f.iter().map(|&a| b.bar(a as usize) as u8).collect(), &mut funcs);
        for k in 0..=next {
            if funcs.len() >= cap {
                break;
            }
            let g = funcs[k].clone();
            push(pointwise(&f, &g, &|p, q| b.add(p, q)), &mut funcs);
            push(pointwise(&g, &f, &|p, q| b.add(p, q)), &mut funcs);
            push(pointwise(&f, &g, &|p, q| b.circ(p, q)), &mut funcs);
            push(pointwise(&g, &f, &|p, q| b.circ(p, q)), &mut funcs);
        }
        next += 1;
    }
    let cap_reached = funcs.len() >= cap;
    let absorbing: Vec<&Vec<u8>> = funcs
        .iter()
        .filter(|f| (0..n).all(|y| f[y] == 0 && f[y * n] == 0))
        .collect();
    let mut values = ElementSet::empty(n);
    for f in &absorbing {
        for x in i.iter() {
            for y in j.iter() {
                values.insert(f[x * n + y] as usize);
            }
        }
    }
    AbsorbingBound {
        set: ideal_closure(b, &values),
        functions: funcs.len(),
        absorbing: absorbing.len(),
        cap_reached,
    }
}

/// Verdict for one ordered pair of ideals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairVerdict {
    pub left: ElementSet,
    pub right: ElementSet,
    /// Ideal generated by `I*J + J*I + [I,J]₊`.
    pub lower: ElementSet,
    /// `[I, J]`.
    pub upper: ElementSet,
    pub equal: bool,
    /// Whether `I*J + J*I + [I,J]₊` is already an ideal.
    pub raw_is_ideal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommutatorConjecture {
    pub pairs: Vec<PairVerdict>,
    pub all_equal: bool,
    pub all_raw_ideal: bool,
}

/// Compares `[I, J]` with the ideal generated by `I*J + J*I + [I,J]₊` on
/// every ordered pair of ideals.
pub fn conjecture_commutator_equality(b: &SkewBrace) -> Result<CommutatorConjecture> {
    let ideals = substructures::all_ideals(b);
    conjecture_on_ideals(b, &ideals)
}

pub(crate) fn conjecture_on_ideals(b: &SkewBrace, ideals: &[ElementSet]) -> Result<CommutatorConjecture> {
    let mut pairs = Vec::with_capacity(ideals.len() * ideals.len());
    for i in ideals {
        for j in ideals {
            let raw = sum_set(
                b,
                &sum_set(b, &star_product(b, i, j), &star_product(b, j, i)),
                &b.add_group().commutator_set(i, j),
            );
            let lower = ideal_closure(b, &raw);
            let upper = smith_commutator(b, i, j)?;
            if !lower.is_subset(&upper) {
                return Err(Error::InternalInconsistency(format!(
                    "I*J + J*I + [I,J]₊ generates {lower}, not inside [I,J] = {upper}"
                )));
            }
            pairs.push(PairVerdict {
                left: *i,
                right: *j,
                lower,
                upper,
                equal: lower == upper,
                raw_is_ideal: is_ideal(b, &raw)?,
            });
        }
    }
    let all_equal = pairs.iter().all(|p| p.equal);
    let all_raw_ideal = pairs.iter().all(|p| p.raw_is_ideal);
    Ok(CommutatorConjecture { pairs, all_equal, all_raw_ideal })
}

/// Join of all central ideals; must coincide with `ζ(A)`.
pub fn largest_central_ideal(b: &SkewBrace) -> Result<ElementSet> {
    let mut join = ElementSet::zero(b.order());
    for ideal in substructures::all_ideals(b) {
        if is_central_ideal(b, &ideal)? {
            join = join.union(&ideal);
        }
    }
    let join = ideal_closure(b, &join);
    let zeta = substructures::distinguished_sets(b)?.zeta;
    if join != zeta {
        return Err(Error::InternalInconsistency(format!(
            "largest central ideal {join} differs from the center {zeta}"
        )));
    }
    Ok(join)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::trivial_brace;
    use crate::catalog;
    use crate::named::{b4, op_s3};

    fn set(n: usize, m: &[usize]) -> ElementSet {
        ElementSet::from_members(n, m.iter().copied())
    }

    #[test]
    fn empty_generators_give_discrete_partition() {
        let b = b4();
        assert_eq!(congruence_generated(&b, &[]), Partition::discrete(4));
    }

    #[test]
    fn principal_congruence_of_central_element() {
        let b = b4();
        let p = congruence_generated(&b, &[(1, 0)]);
        assert_eq!(p.classes(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(p, ideal_partition(&b, &set(4, &[0, 1])));
        assert!(is_congruence(&b, &p));
        assert!(!is_congruence(&b, &ideal_partition(&b, &set(4, &[0, 2]))));
    }

    #[test]
    fn congruence_of_three_cycle_in_trivial_s3() {
        let g = catalog::symmetric3();
        let b = trivial_brace(&g);
        let c = (1..6).find(|&x| g.element_order(x) == 3).unwrap();
        let p = congruence_generated(&b, &[(0, c)]);
        let a3 = ElementSet::filter(6, |x| g.element_order(x) != 2);
        assert_eq!(p, ideal_partition(&b, &a3));
        assert_eq!(p.class_count(), 2);
    }

    #[test]
    fn commutator_examples() {
        let z4 = trivial_brace(&catalog::cyclic(4));
        assert!(smith_commutator(&z4, &ElementSet::full(4), &ElementSet::full(4)).unwrap().is_trivial());

        let b = b4();
        assert_eq!(smith_commutator(&b, &ElementSet::full(4), &ElementSet::full(4)).unwrap(), set(4, &[0, 1]));

        let o = op_s3();
        let c = smith_commutator(&o, &ElementSet::full(6), &ElementSet::full(6)).unwrap();
        assert_eq!(c, o.add_group().commutator_set(&ElementSet::full(6), &ElementSet::full(6)));
    }

    #[test]
    fn both_delta_methods_agree_on_small_braces() {
        for b in [b4(), op_s3(), trivial_brace(&catalog::symmetric3())] {
            let ideals = substructures::all_ideals(&b);
            for i in &ideals {
                for j in &ideals {
                    assert_eq!(
                        delta_commutator(&b, i, j, DeltaMethod::Congruence).unwrap(),
                        delta_commutator(&b, i, j, DeltaMethod::IdealOfPairs).unwrap(),
                    );
                }
            }
        }
    }

    #[test]
    fn non_ideal_inputs_are_rejected() {
        let b = b4();
        assert_eq!(smith_commutator(&b, &set(4, &[0, 2]), &ElementSet::full(4)).unwrap_err(), Error::NotAnIdeal);
        assert!(PairAlgebra::new(&b, &set(4, &[0, 2])).is_err());
    }

    #[test]
    fn centrality() {
        let b = b4();
        assert!(is_central_ideal(&b, &set(4, &[0, 1])).unwrap());
        assert!(is_central_ideal(&b, &ElementSet::zero(4)).unwrap());
        let o = op_s3();
        let a3 = substructures::all_ideals(&o)[1];
        assert!(!is_central_ideal(&o, &a3).unwrap());
    }

    #[test]
    fn abelianness() {
        assert!(is_abelian_brace(&trivial_brace(&catalog::cyclic(4))).unwrap());
        assert!(!is_abelian_brace(&b4()).unwrap());
        assert!(!is_abelian_brace(&op_s3()).unwrap());
    }

    #[test]
    fn absorbing_bounds() {
        let b = b4();
        let all = ElementSet::full(4);
        let bound = absorbing_lower_bound(&b, &all, &all, 100_000);
        assert_eq!(bound.set, set(4, &[0, 1]));
        let z4 = trivial_brace(&catalog::cyclic(4));
        assert!(absorbing_lower_bound(&z4, &ElementSet::full(4), &ElementSet::full(4), 1000).set.is_trivial());
        let o = op_s3();
        let full = ElementSet::full(6);
        let lb = absorbing_lower_bound(&o, &full, &full, 2000);
        assert!(lb.cap_reached);
        assert!(ideal_closure(&o, &star_product(&o, &full, &full)).is_subset(&lb.set));
        assert!(lb.set.is_subset(&smith_commutator(&o, &full, &full).unwrap()));
    }

    #[test]
    fn conjecture_on_named_braces() {
        let r = conjecture_commutator_equality(&b4()).unwrap();
        assert_eq!(r.pairs.len(), 9);
        assert!(r.all_equal);
        let o = conjecture_commutator_equality(&op_s3()).unwrap();
        for p in &o.pairs {
            assert_eq!(p.upper, o_group_commutator(&p.left, &p.right));
        }
    }

    fn o_group_commutator(i: &ElementSet, j: &ElementSet) -> ElementSet {
        op_s3().add_group().commutator_set(i, j)
    }

    #[test]
    fn largest_central_ideals() {
        assert_eq!(largest_central_ideal(&b4()).unwrap(), set(4, &[0, 1]));
        assert!(largest_central_ideal(&op_s3()).unwrap().is_trivial());
        assert!(largest_central_ideal(&trivial_brace(&catalog::cyclic(4))).unwrap().is_full());
    }
}
