//! Finite groups given by explicit Cayley tables.
//!
//! Elements are the indices `0..order`; the identity is always `0`. Tables
//! handed to [`make_group`] with the identity elsewhere are relabeled by the
//! transposition that moves it to `0`.

use std::fmt;

use crate::elements::{ElementSet, MAX_ORDER};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inv: Vec<usize>,
}

/// Outcome of [`make_group`]: the validated group and the relabeling applied.
#[derive(Debug, Clone)]
pub struct Relabeled {
    pub group: FiniteGroup,
    /// `relabel[old] = new`. The identity permutation when no relabeling was needed.
    pub relabel: Vec<usize>,
}

/// Validates an arbitrary square table as a group, moving the identity to `0`.
pub fn make_group(rows: &[Vec<usize>]) -> Result<Relabeled> {
    let n = check_shape(rows)?;
    let at = |a: usize, b: usize| rows[a][b];
    let identity = (0..n)
        .find(|&e| (0..n).all(|a| at(e, a) == a && at(a, e) == a))
        .ok_or(Error::NoIdentity)?;
    let mut relabel: Vec<usize> = (0..n).collect();
    relabel.swap(0, identity);
    // relabel is an involution, so it is its own inverse.
    let table = (0..n * n)
        .map(|i| {
            let (a, b) = (i / n, i % n);
            relabel[at(relabel[a], relabel[b])]
        })
        .collect();
    let group = FiniteGroup::from_flat(n, table)?;
    Ok(Relabeled { group, relabel })
}

fn check_shape(rows: &[Vec<usize>]) -> Result<usize> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::Empty);
    }
    if n > MAX_ORDER {
        return Err(Error::TooLarge { order: n, max: MAX_ORDER });
    }
    for (r, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotSquare { row: r, len: row.len(), expected: n });
        }
        if let Some((c, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(Error::EntryOutOfRange { row: r, col: c, value: v, order: n });
        }
    }
    Ok(n)
}

impl FiniteGroup {
    /// Validates a table whose identity must already be `0`.
    pub fn new(rows: &[Vec<usize>]) -> Result<Self> {
        let n = check_shape(rows)?;
        Self::from_flat(n, rows.iter().flatten().copied().collect())
    }

    /// Builds and validates the group with `op(a, b) = f(a, b)` on `0..order`.
    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::Empty);
        }
        if order > MAX_ORDER {
            return Err(Error::TooLarge { order, max: MAX_ORDER });
        }
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let v = f(a, b);
                if v >= order {
                    return Err(Error::EntryOutOfRange { row: a, col: b, value: v, order });
                }
                table.push(v);
            }
        }
        Self::from_flat(order, table)
    }

    fn from_flat(n: usize, table: Vec<usize>) -> Result<Self> {
        let at = |a: usize, b: usize| table[a * n + b];
        if (0..n).any(|a| at(0, a) != a || at(a, 0) != a) {
            return Err(Error::NoIdentity);
        }
        let mut inv = vec![usize::MAX; n];
        for a in 0..n {
            match (0..n).find(|&b| at(a, b) == 0 && at(b, a) == 0) {
                Some(b) => inv[a] = b,
                None => return Err(Error::NoInverse { element: a }),
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(FiniteGroup { order: n, table, inv })
    }

    pub fn trivial() -> Self {
        FiniteGroup { order: 1, table: vec![0], inv: vec![0] }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.op(a, b) == self.op(b, a)))
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.op(self.op(self.inv(a), self.inv(b)), self.op(a, b))
    }

    /// `g s g⁻¹`.
    pub fn conjugate(&self, g: usize, s: usize) -> usize {
        self.op(self.op(g, s), self.inv(g))
    }

    /// `a^k` for a signed exponent.
    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        (0..k.unsigned_abs()).fold(0, |acc, _| self.op(acc, base))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.op(x, a);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order).map(|a| self.element_order(a)).fold(1, lcm)
    }

    pub fn center(&self) -> ElementSet {
        ElementSet::filter(self.order, |a| (0..self.order).all(|b| self.op(a, b) == self.op(b, a)))
    }

    /// Smallest subgroup containing `gens`.
    pub fn subgroup_closure(&self, gens: &ElementSet) -> ElementSet {
        let mut closed = ElementSet::zero(self.order);
        let mut frontier = vec![0];
        let gens: Vec<usize> = gens.iter().filter(|&g| g != 0).collect();
        // In a finite group closure under right multiplication by the generators
        // already yields inverses.
        while let Some(a) = frontier.pop() {
            for &g in &gens {
                let x = self.op(a, g);
                if closed.insert(x) {
                    frontier.push(x);
                }
            }
        }
        closed
    }

    pub fn is_subgroup(&self, s: &ElementSet) -> bool {
        s.contains(0) && s.iter().all(|a| s.iter().all(|b| s.contains(self.op(a, self.inv(b)))))
    }

    pub fn is_normal_subgroup(&self, s: &ElementSet) -> Result<bool> {
        if !self.is_subgroup(s) {
            return Err(Error::NotASubgroup);
        }
        Ok(self.is_normal_unchecked(s))
    }

    pub(crate) fn is_normal_unchecked(&self, s: &ElementSet) -> bool {
        (0..self.order).all(|g| s.iter().all(|x| s.contains(self.conjugate(g, x))))
    }

    /// Smallest normal subgroup containing `gens`.
    pub fn normal_closure(&self, gens: &ElementSet) -> ElementSet {
        let mut current = self.subgroup_closure(gens);
        loop {
            let mut next = current;
            for g in 0..self.order {
                for x in current.iter() {
                    next.insert(self.conjugate(g, x));
                }
            }
            next = self.subgroup_closure(&next);
            if next == current {
                return current;
            }
            current = next;
        }
    }

    /// The quotient by a normal subgroup, with cosets labeled by increasing
    /// least member, and the projection `carrier -> coset index`.
    pub fn quotient(&self, normal: &ElementSet) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_normal_subgroup(normal)? {
            return Err(Error::NotNormal);
        }
        let projection = coset_projection(self.order, |a, n| self.op(a, n), normal);
        let q = projection.iter().max().map_or(0, |&m| m + 1);
        let reps = representatives(&projection, q);
        let group = FiniteGroup::from_fn(q, |i, j| projection[self.op(reps[i], reps[j])])?;
        Ok((group, projection))
    }

    /// Subgroup generated by all `[s, t]` with `s ∈ S`, `t ∈ T`.
    pub fn commutator_set(&self, s: &ElementSet, t: &ElementSet) -> ElementSet {
        let mut gens = ElementSet::empty(self.order);
        for a in s.iter() {
            for b in t.iter() {
                gens.insert(self.commutator(a, b));
            }
        }
        self.subgroup_closure(&gens)
    }

    /// Lower central series `G = γ₁ ⊇ γ₂ ⊇ ...` up to the first repeat.
    pub fn lower_central_series(&self) -> Vec<ElementSet> {
        let all = ElementSet::full(self.order);
        let mut series = vec![all];
        loop {
            let last = *series.last().unwrap();
            let next = self.commutator_set(&last, &all);
            if next == last {
                return series;
            }
            series.push(next);
        }
    }

    /// Least `c` with `γ_{c+1} = {0}`; `None` if the lower central series
    /// stabilizes above the trivial subgroup.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let series = self.lower_central_series();
        let last = series.last().unwrap();
        last.is_trivial().then(|| series.len() - 1)
    }

    /// Restriction of the operation to a subgroup, relabeled by rank of members.
    pub fn subgroup(&self, s: &ElementSet) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_subgroup(s) {
            return Err(Error::NotASubgroup);
        }
        let members = s.members();
        let mut rank = vec![usize::MAX; self.order];
        for (i, &m) in members.iter().enumerate() {
            rank[m] = i;
        }
        let g = FiniteGroup::from_fn(members.len(), |i, j| rank[self.op(members[i], members[j])])?;
        Ok((g, members))
    }

    /// Relabels the carrier by `perm` (`perm[old] = new`, with `perm[0] = 0`).
    pub fn relabel(&self, perm: &[usize]) -> Result<FiniteGroup> {
        let n = self.order;
        let inverse = invert_permutation(perm)?;
        if perm[0] != 0 {
            return Err(Error::PreconditionViolated("relabeling must fix 0".into()));
        }
        FiniteGroup::from_fn(n, |a, b| perm[self.op(inverse[a], inverse[b])])
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup").field("order", &self.order).field("rows", &self.rows()).finish()
    }
}

pub(crate) fn invert_permutation(perm: &[usize]) -> Result<Vec<usize>> {
    let n = perm.len();
    let mut inverse = vec![usize::MAX; n];
    for (i, &p) in perm.iter().enumerate() {
        if p >= n || inverse[p] != usize::MAX {
            return Err(Error::PreconditionViolated("not a permutation".into()));
        }
        inverse[p] = i;
    }
    Ok(inverse)
}

/// Labels the left cosets `a·N` by increasing least member.
pub(crate) fn coset_projection(
    order: usize,
    op: impl Fn(usize, usize) -> usize,
    normal: &ElementSet,
) -> Vec<usize> {
    let mut projection = vec![usize::MAX; order];
    let mut next = 0;
    for a in 0..order {
        if projection[a] != usize::MAX {
            continue;
        }
        for m in normal.iter() {
            projection[op(a, m)] = next;
        }
        next += 1;
    }
    projection
}

pub(crate) fn representatives(projection: &[usize], count: usize) -> Vec<usize> {
    let mut reps = vec![usize::MAX; count];
    for (a, &p) in projection.iter().enumerate() {
        if reps[p] == usize::MAX {
            reps[p] = a;
        }
    }
    reps
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}
