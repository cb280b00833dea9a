//! The skew brace type and its basic derived operations.
//!
//! A skew brace is a carrier with two group structures `(A,+)` and `(A,∘)`
//! sharing the identity `0` and satisfying
//! `x∘(y+z) = (x∘y) − x + (x∘z)`. The maps `λ_x(y) = −x + (x∘y)` and the
//! operation `x*y = λ_x(y) − y` are precomputed at construction.

use std::fmt;

use serde::Serialize;

use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::group::{self, FiniteGroup};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SkewBrace {
    add: FiniteGroup,
    circ: FiniteGroup,
    lambda: Vec<usize>,
    star: Vec<usize>,
}

/// Builds a skew brace from raw `+` and `∘` tables. Both must have identity `0`.
pub fn make_brace(add_rows: &[Vec<usize>], circ_rows: &[Vec<usize>]) -> Result<SkewBrace> {
    let add = FiniteGroup::new(add_rows)
        .map_err(|e| Error::GroupInvalid { which: "additive", source: Box::new(e) })?;
    let circ = FiniteGroup::new(circ_rows)
        .map_err(|e| Error::GroupInvalid { which: "multiplicative", source: Box::new(e) })?;
    SkewBrace::new(add, circ)
}

impl SkewBrace {
    /// Verifies the brace axiom on every triple.
    pub fn new(add: FiniteGroup, circ: FiniteGroup) -> Result<Self> {
        let n = add.order();
        if circ.order() != n {
            return Err(Error::MismatchedIdentity(format!(
                "carrier sizes differ ({n} vs {})",
                circ.order()
            )));
        }
        for x in 0..n {
            let neg_x = add.inv(x);
            for y in 0..n {
                let xy = circ.op(x, y);
                let xy_minus_x = add.op(xy, neg_x);
                for z in 0..n {
                    let lhs = circ.op(x, add.op(y, z));
                    let rhs = add.op(xy_minus_x, circ.op(x, z));
                    if lhs != rhs {
                        return Err(Error::AxiomFails { x, y, z });
                    }
                }
            }
        }
        let lambda: Vec<usize> = (0..n * n)
            .map(|i| add.op(add.inv(i / n), circ.op(i / n, i % n)))
            .collect();
        let star = (0..n * n)
            .map(|i| add.op(lambda[i], add.inv(i % n)))
            .collect();
        let brace = SkewBrace { add, circ, lambda, star };
        brace.check_lambda_homomorphism()?;
        Ok(brace)
    }

    /// `λ_{x∘y} = λ_{x+λ_x(y)} = λ_x λ_y`; a theorem, so failure is a bug.
    fn check_lambda_homomorphism(&self) -> Result<()> {
        let n = self.order();
        for x in 0..n {
            for y in 0..n {
                let xy = self.circ(x, y);
                if xy != self.add(x, self.lambda(x, y)) {
                    return Err(Error::InternalInconsistency(format!(
                        "x∘y != x + λ_x(y) at ({x}, {y})"
                    )));
                }
                if (0..n).any(|z| self.lambda(xy, z) != self.lambda(x, self.lambda(y, z))) {
                    return Err(Error::InternalInconsistency(format!(
                        "λ is not a homomorphism at ({x}, {y})"
                    )));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn add_group(&self) -> &FiniteGroup {
        &self.add
    }

    pub fn circ_group(&self) -> &FiniteGroup {
        &self.circ
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add.op(x, y)
    }

    #[inline]
    pub fn circ(&self, x: usize, y: usize) -> usize {
        self.circ.op(x, y)
    }

    /// Additive inverse `−x`.
    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.add.inv(x)
    }

    /// Multiplicative inverse `x̄`.
    #[inline]
    pub fn bar(&self, x: usize) -> usize {
        self.circ.inv(x)
    }

    /// `x − y`, i.e. `x + (−y)`.
    #[inline]
    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn lambda(&self, x: usize, y: usize) -> usize {
        self.lambda[x * self.order() + y]
    }

    /// `λ_x` as a permutation of the carrier.
    pub fn lambda_of(&self, x: usize) -> Vec<usize> {
        let n = self.order();
        self.lambda[x * n..(x + 1) * n].to_vec()
    }

    #[inline]
    pub fn star(&self, x: usize, y: usize) -> usize {
        self.star[x * self.order() + y]
    }

    pub fn star_table(&self) -> StarTable {
        StarTable { order: self.order(), table: self.star.clone() }
    }

    /// Additive commutator `[x, y]₊ = −x − y + x + y`.
    #[inline]
    pub fn add_commutator(&self, x: usize, y: usize) -> usize {
        self.add.commutator(x, y)
    }

    pub fn is_abelian_type(&self) -> bool {
        self.add.is_abelian()
    }

    /// Additive subgroup generated by a set.
    pub fn add_closure(&self, gens: &ElementSet) -> ElementSet {
        self.add.subgroup_closure(gens)
    }

    pub fn add_rows(&self) -> Vec<Vec<usize>> {
        self.add.rows()
    }

    pub fn circ_rows(&self) -> Vec<Vec<usize>> {
        self.circ.rows()
    }

    /// Quotient by an ideal. Cosets are labeled by increasing least member.
    pub fn quotient(&self, ideal: &ElementSet) -> Result<(SkewBrace, Vec<usize>)> {
        if !crate::substructures::is_ideal(self, ideal)? {
            return Err(Error::NotAnIdeal);
        }
        let (add_q, projection) = self.add.quotient(ideal)?;
        let reps = group::representatives(&projection, add_q.order());
        let circ_q = FiniteGroup::from_fn(add_q.order(), |i, j| projection[self.circ(reps[i], reps[j])])?;
        Ok((SkewBrace::new(add_q, circ_q)?, projection))
    }

    /// Relabels the carrier by `perm` (`perm[old] = new`, `perm[0] = 0`).
    pub fn relabel(&self, perm: &[usize]) -> Result<SkewBrace> {
        SkewBrace::new(self.add.relabel(perm)?, self.circ.relabel(perm)?)
    }
}

impl fmt::Debug for SkewBrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SkewBrace")
            .field("order", &self.order())
            .field("add", &self.add.rows())
            .field("circ", &self.circ.rows())
            .finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarTable {
    order: usize,
    table: Vec<usize>,
}

impl StarTable {
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|&v| v == 0)
    }
}

/// `(G, +, +)`: both operations equal, `λ ≡ id`.
pub fn trivial_brace(g: &FiniteGroup) -> SkewBrace {
    SkewBrace::new(g.clone(), g.clone()).expect("trivial brace always satisfies the axiom")
}

/// `(G, +, +^op)` with `x∘y = y + x`.
pub fn opposite_brace(g: &FiniteGroup) -> SkewBrace {
    let op = FiniteGroup::from_fn(g.order(), |x, y| g.op(y, x)).expect("opposite group");
    SkewBrace::new(g.clone(), op).expect("opposite brace always satisfies the axiom")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub passed: bool,
    /// First failing tuple, if any.
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn first_failure(n: usize, arity: usize, mut holds: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    let mut tuple = vec![0; arity];
    loop {
        if !holds(&tuple) {
            return Some(tuple);
        }
        let mut i = arity;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            tuple[i] += 1;
            if tuple[i] < n {
                break;
            }
            tuple[i] = 0;
        }
    }
}

/// Exhaustively re-checks the standard identities of a skew brace.
pub fn verify_identities(b: &SkewBrace) -> IdentityReport {
    let n = b.order();
    let mut checks = Vec::new();
    let mut push = |name, witness: Option<Vec<usize>>| {
        checks.push(IdentityCheck { name, passed: witness.is_none(), witness })
    };

    push(
        "axiom",
        first_failure(n, 3, |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            b.circ(x, b.add(y, z)) == b.add(b.sub(b.circ(x, y), x), b.circ(x, z))
        }),
    );
    push(
        "axiom2",
        first_failure(n, 3, |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            b.circ(x, b.add(y, z)) == b.add(b.circ(x, y), b.lambda(x, z))
        }),
    );
    push(
        "star-distr",
        first_failure(n, 3, |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            let rhs = b.add(b.add(b.add(b.star(x, y), y), b.star(x, z)), b.neg(y));
            b.star(x, b.add(y, z)) == rhs
        }),
    );

    // comm1 ranges x, y over Fix(A) ∩ ker λ only.
    let pseudo_socle: Vec<usize> = (0..n)
        .filter(|&x| (0..n).all(|y| b.star(x, y) == 0 && b.star(y, x) == 0))
        .collect();
    let mut comm1 = None;
    'outer: for a in 0..n {
        for bb in 0..n {
            for &x in &pseudo_socle {
                for &y in &pseudo_socle {
                    if b.star(b.add(a, x), b.add(bb, y)) != b.star(a, bb) {
                        comm1 = Some(vec![a, bb, x, y]);
                        break 'outer;
                    }
                }
            }
        }
    }
    push("comm1", comm1);
    push(
        "circ-elimination",
        first_failure(n, 2, |t| {
            let (x, y) = (t[0], t[1]);
            b.circ(x, y) == b.add(b.add(x, b.star(x, y)), y)
        }),
    );
    push(
        "lambda-homomorphism",
        first_failure(n, 3, |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            b.lambda(b.circ(x, y), z) == b.lambda(x, b.lambda(y, z))
        }),
    );
    push(
        "lambda-automorphism",
        first_failure(n, 3, |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            b.lambda(x, b.add(y, z)) == b.add(b.lambda(x, y), b.lambda(x, z))
        }),
    );
    IdentityReport { checks }
}
