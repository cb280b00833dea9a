//! Terms over `{0, +, −, *, bar}` with variables and constants.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::brace::SkewBrace;
use crate::error::{Error, Result};
use crate::substructures;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Zero,
    Var(usize),
    Const(usize),
    Neg(Box<Term>),
    Bar(Box<Term>),
    Sum(Box<Term>, Box<Term>),
    Star(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(i: usize) -> Term {
        Term::Var(i)
    }

    pub fn neg(t: Term) -> Term {
        Term::Neg(Box::new(t))
    }

    pub fn bar(t: Term) -> Term {
        Term::Bar(Box::new(t))
    }

    pub fn sum(s: Term, t: Term) -> Term {
        Term::Sum(Box::new(s), Box::new(t))
    }

    pub fn star(s: Term, t: Term) -> Term {
        Term::Star(Box::new(s), Box::new(t))
    }

    /// `x∘y` rewritten as `x + (x*y) + y`.
    pub fn circ(s: Term, t: Term) -> Term {
        Term::sum(s.clone(), Term::sum(Term::star(s, t.clone()), t))
    }

    /// One more than the largest variable index, `0` for closed terms.
    pub fn arity(&self) -> usize {
        match self {
            Term::Zero | Term::Const(_) => 0,
            Term::Var(i) => i + 1,
            Term::Neg(t) | Term::Bar(t) => t.arity(),
            Term::Sum(s, t) | Term::Star(s, t) => s.arity().max(t.arity()),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Zero | Term::Const(_) | Term::Var(_) => 1,
            Term::Neg(t) | Term::Bar(t) => 1 + t.depth(),
            Term::Sum(s, t) | Term::Star(s, t) => 1 + s.depth().max(t.depth()),
        }
    }

    pub fn contains_var(&self, var: usize) -> bool {
        match self {
            Term::Zero | Term::Const(_) => false,
            Term::Var(i) => *i == var,
            Term::Neg(t) | Term::Bar(t) => t.contains_var(var),
            Term::Sum(s, t) | Term::Star(s, t) => s.contains_var(var) || t.contains_var(var),
        }
    }

    /// True iff no `*` node has `var` in either operand.
    pub fn star_free_in(&self, var: usize) -> bool {
        match self {
            Term::Zero | Term::Const(_) | Term::Var(_) => true,
            Term::Neg(t) | Term::Bar(t) => t.star_free_in(var),
            Term::Sum(s, t) => s.star_free_in(var) && t.star_free_in(var),
            Term::Star(s, t) => !s.contains_var(var) && !t.contains_var(var),
        }
    }

    /// The integer `k` read off the syntax of a term that is `*`-free in
    /// `var`: leaves contribute `1` for `var` and `0` otherwise, `−` and
    /// `bar` negate, `+` adds.
    pub fn translation_coefficient(&self, var: usize) -> Option<i64> {
        match self {
            Term::Zero | Term::Const(_) => Some(0),
            Term::Var(i) => Some(i64::from(*i == var)),
            Term::Neg(t) | Term::Bar(t) => t.translation_coefficient(var).map(|k| -k),
            Term::Sum(s, t) => Some(s.translation_coefficient(var)? + t.translation_coefficient(var)?),
            Term::Star(s, t) => (!s.contains_var(var) && !t.contains_var(var)).then_some(0),
        }
    }

    pub fn eval(&self, b: &SkewBrace, assignment: &[usize]) -> Result<usize> {
        let needed = self.arity();
        if assignment.len() < needed {
            return Err(Error::ArityMismatch { needed, given: assignment.len() });
        }
        let n = b.order();
        if let Some(&value) = assignment[..needed].iter().find(|&&v| v >= n) {
            return Err(Error::ConstantOutOfRange { value, order: n });
        }
        self.eval_unchecked(b, assignment)
    }

    fn eval_unchecked(&self, b: &SkewBrace, a: &[usize]) -> Result<usize> {
        Ok(match self {
            Term::Zero => 0,
            Term::Var(i) => a[*i],
            Term::Const(c) => {
                if *c >= b.order() {
                    return Err(Error::ConstantOutOfRange { value: *c, order: b.order() });
                }
                *c
            }
            Term::Neg(t) => b.neg(t.eval_unchecked(b, a)?),
            Term::Bar(t) => b.bar(t.eval_unchecked(b, a)?),
            Term::Sum(s, t) => b.add(s.eval_unchecked(b, a)?, t.eval_unchecked(b, a)?),
            Term::Star(s, t) => b.star(s.eval_unchecked(b, a)?, t.eval_unchecked(b, a)?),
        })
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Zero => write!(f, "0"),
            Term::Var(i) => write!(f, "x{i}"),
            Term::Const(c) => write!(f, "c{c}"),
            Term::Neg(t) => write!(f, "-({t})"),
            Term::Bar(t) => write!(f, "bar({t})"),
            Term::Sum(s, t) => write!(f, "({s} + {t})"),
            Term::Star(s, t) => write!(f, "({s} * {t})"),
        }
    }
}

/// Shape parameters for random terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TermShape {
    pub arity: usize,
    /// Depth counts levels; depth 1 is a single leaf. At most 12.
    pub max_depth: usize,
    /// Constants are drawn from `0..constants`; `0` disables them.
    pub constants: usize,
}

pub const MAX_TERM_DEPTH: usize = 12;

/// Deterministic random term for a given seed.
pub fn random_term(seed: u64, shape: TermShape) -> Term {
    assert!(shape.max_depth <= MAX_TERM_DEPTH, "term depth is capped at {MAX_TERM_DEPTH}");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    generate(&mut rng, &shape, shape.max_depth.max(1), None)
}

/// Random term in which `var` never occurs under a `*`.
pub fn random_star_free_term(seed: u64, shape: TermShape, var: usize) -> Term {
    assert!(shape.max_depth <= MAX_TERM_DEPTH, "term depth is capped at {MAX_TERM_DEPTH}");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    generate(&mut rng, &shape, shape.max_depth.max(1), Some((var, false)))
}

/// `forbid = Some((var, under_star))`.
fn generate(rng: &mut ChaCha8Rng, shape: &TermShape, depth: usize, forbid: Option<(usize, bool)>) -> Term {
    if depth == 1 || rng.random_bool(0.25) {
        return leaf(rng, shape, forbid);
    }
    let sub = |rng: &mut ChaCha8Rng, under_star: bool| {
        let forbid = forbid.map(|(v, s)| (v, s || under_star));
        generate(rng, shape, depth - 1, forbid)
    };
    match rng.random_range(0..6) {
        0 => Term::neg(sub(rng, false)),
        1 => Term::bar(sub(rng, false)),
        2 | 3 => Term::sum(sub(rng, false), sub(rng, false)),
        _ => Term::star(sub(rng, true), sub(rng, true)),
    }
}

fn leaf(rng: &mut ChaCha8Rng, shape: &TermShape, forbid: Option<(usize, bool)>) -> Term {
    let vars: Vec<usize> = (0..shape.arity)
        .filter(|&v| !matches!(forbid, Some((f, true)) if f == v))
        .collect();
    let roll = rng.random_range(0..10);
    if !vars.is_empty() && roll < 7 {
        return Term::Var(vars[rng.random_range(0..vars.len())]);
    }
    if shape.constants > 0 && roll < 9 {
        return Term::Const(rng.random_range(0..shape.constants));
    }
    Term::Zero
}

/// Assignments to test a term on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Assignments {
    /// Every tuple in `A^arity`.
    All,
    /// `count` seeded random tuples.
    Sample { count: usize, seed: u64 },
}

/// Result of [`check_translation_lemma`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TranslationWitness {
    /// The integer read off the term's syntax.
    pub formal: i64,
    /// The observed coefficient, reduced modulo `modulus`.
    pub residue: usize,
    /// Exponent of `(ζ(A), +)`.
    pub modulus: usize,
}

/// Finds the `k` with `t(…, x_var + z, …) = t(…) + k z` for every `z ∈ ζ(A)`
/// and every tested assignment, and checks it against the syntactic count.
pub fn check_translation_lemma(
    b: &SkewBrace,
    t: &Term,
    var: usize,
    assignments: Assignments,
) -> Result<TranslationWitness> {
    let formal = t.translation_coefficient(var).ok_or_else(|| {
        Error::PreconditionViolated(format!("x{var} occurs under a * in {t}"))
    })?;
    let n = b.order();
    let zeta: Vec<usize> = substructures::center(b).members();
    let add = b.add_group();
    let modulus = zeta.iter().map(|&z| add.element_order(z)).fold(1, crate::group::lcm);
    // multiples[k][i] = k · zeta[i]
    let multiples: Vec<Vec<usize>> = (0..modulus)
        .map(|k| zeta.iter().map(|&z| add.pow(z, k as i64)).collect())
        .collect();
    let mut candidates: Vec<usize> = (0..modulus).collect();

    let arity = t.arity().max(var + 1);
    let mut check = |tuple: &mut Vec<usize>| -> Result<()> {
        let base = t.eval_unchecked(b, tuple)?;
        let x = tuple[var];
        for (i, &z) in zeta.iter().enumerate() {
            tuple[var] = b.add(x, z);
            let shifted = t.eval_unchecked(b, tuple)?;
            let diff = b.add(b.neg(base), shifted);
            candidates.retain(|&k| multiples[k][i] == diff);
        }
        tuple[var] = x;
        Ok(())
    };
    let mut tuple = vec![0; arity];
    match assignments {
        Assignments::All => loop {
            check(&mut tuple)?;
            let mut i = arity;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                tuple[i] += 1;
                if tuple[i] < n {
                    break;
                }
                tuple[i] = 0;
            }
            if tuple.iter().all(|&v| v == 0) {
                break;
            }
        },
        Assignments::Sample { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..count {
                tuple.iter_mut().for_each(|v| *v = rng.random_range(0..n));
                check(&mut tuple)?;
            }
        }
    }
    let residue = match candidates.as_slice() {
        [k] => *k,
        [] => {
            return Err(Error::InternalInconsistency(format!(
                "no translation coefficient for {t} in x{var}"
            )))
        }
        _ => return Err(Error::InternalInconsistency("translation coefficient not unique".into())),
    };
    if formal.rem_euclid(modulus as i64) as usize != residue {
        return Err(Error::InternalInconsistency(format!(
            "observed coefficient {residue} mod {modulus} differs from syntactic {formal}"
        )));
    }
    Ok(TranslationWitness { formal, residue, modulus })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::trivial_brace;
    use crate::catalog;
    use crate::named::{b4, op_s3};

    fn x(i: usize) -> Term {
        Term::var(i)
    }

    #[test]
    fn star_vanishes_on_trivial_brace() {
        let b = trivial_brace(&catalog::cyclic(4));
        let t = Term::star(x(0), x(1));
        for p in 0..4 {
            for q in 0..4 {
                assert_eq!(t.eval(&b, &[p, q]).unwrap(), 0);
            }
        }
    }

    #[test]
    fn circ_elimination_term() {
        for b in [b4(), op_s3()] {
            let t = Term::circ(x(0), x(1));
            for p in 0..b.order() {
                for q in 0..b.order() {
                    assert_eq!(t.eval(&b, &[p, q]).unwrap(), b.circ(p, q));
                }
            }
        }
    }

    #[test]
    fn bar_of_constant() {
        let b = b4();
        for c in 0..4 {
            assert_eq!(Term::bar(Term::Const(c)).eval(&b, &[]).unwrap(), b.bar(c));
        }
        assert!(matches!(
            Term::Const(9).eval(&b, &[]),
            Err(Error::ConstantOutOfRange { value: 9, .. })
        ));
    }

    #[test]
    fn arity_mismatch() {
        let t = Term::sum(x(0), x(2));
        assert_eq!(t.eval(&b4(), &[1, 1]).unwrap_err(), Error::ArityMismatch { needed: 3, given: 2 });
    }

    #[test]
    fn star_free_examples() {
        assert!(Term::sum(x(0), Term::star(x(1), x(2))).star_free_in(0));
        assert!(!Term::star(x(0), x(1)).star_free_in(0));
        assert!(Term::neg(Term::bar(x(0))).star_free_in(0));
    }

    #[test]
    fn translation_examples() {
        let b = b4();
        let w = check_translation_lemma(&b, &x(0), 0, Assignments::All).unwrap();
        assert_eq!((w.formal, w.residue, w.modulus), (1, 1, 2));
        let w = check_translation_lemma(&b, &Term::neg(x(0)), 0, Assignments::All).unwrap();
        assert_eq!(w.formal, -1);
        assert_eq!(w.residue, 1);
        let t = Term::sum(x(0), Term::sum(x(1), x(0)));
        let w = check_translation_lemma(&b, &t, 0, Assignments::All).unwrap();
        assert_eq!(w.formal, 2);
        assert_eq!(w.residue, 0);
        let z4 = trivial_brace(&catalog::cyclic(4));
        let w = check_translation_lemma(&z4, &Term::neg(x(0)), 0, Assignments::All).unwrap();
        assert_eq!((w.formal, w.residue, w.modulus), (-1, 3, 4));
    }

    #[test]
    fn translation_requires_star_freeness() {
        let err = check_translation_lemma(&b4(), &Term::star(x(0), x(1)), 0, Assignments::All);
        assert!(matches!(err, Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn random_terms_are_deterministic() {
        let shape = TermShape { arity: 2, max_depth: 3, constants: 4 };
        assert_eq!(random_term(0, shape), random_term(0, shape));
        assert!(random_term(0, shape).depth() <= 3);
        let leaf = random_term(1, TermShape { arity: 1, max_depth: 1, constants: 0 });
        assert!(matches!(leaf, Term::Var(0) | Term::Zero));
        for seed in 0..50 {
            let closed = random_term(seed, TermShape { arity: 0, max_depth: 2, constants: 3 });
            assert_eq!(closed.arity(), 0);
        }
    }

    #[test]
    fn generated_star_free_terms_are_star_free() {
        let shape = TermShape { arity: 3, max_depth: 6, constants: 4 };
        for seed in 0..200 {
            assert!(random_star_free_term(seed, shape, 0).star_free_in(0));
        }
    }
}
