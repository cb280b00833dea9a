//! Set-theoretic solutions of the Yang–Baxter equation on `{0, …, n−1}`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::brace::SkewBrace;
use crate::error::{Error, Result};

/// `r(x, y) = (σ_x(y), τ_y(x))`, stored as two flat `n × n` tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Solution {
    size: usize,
    first: Vec<usize>,
    second: Vec<usize>,
}

impl Solution {
    /// Builds `r` from a total function; values must lie in `0..n`.
    pub fn from_fn(size: usize, r: impl Fn(usize, usize) -> (usize, usize)) -> Result<Self> {
        let mut first = Vec::with_capacity(size * size);
        let mut second = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                let (u, v) = r(x, y);
                for w in [u, v] {
                    if w >= size {
                        return Err(Error::EntryOutOfRange { row: x, col: y, value: w, order: size });
                    }
                }
                first.push(u);
                second.push(v);
            }
        }
        Ok(Solution { size, first, second })
    }

    /// `r(x, y) = (y, x)`.
    pub fn flip(size: usize) -> Self {
        Solution::from_fn(size, |x, y| (y, x)).expect("flip stays in range")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        let i = x * self.size + y;
        (self.first[i], self.second[i])
    }

    /// `σ_x` as a table.
    pub fn sigma(&self, x: usize) -> Vec<usize> {
        (0..self.size).map(|y| self.apply(x, y).0).collect()
    }

    /// `τ_y` as a table.
    pub fn tau(&self, y: usize) -> Vec<usize> {
        (0..self.size).map(|x| self.apply(x, y).1).collect()
    }

    /// Copy with one seeded entry of `r` replaced by a different pair.
    pub fn corrupted(&self, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = self.clone();
        let n = self.size;
        if n < 2 {
            return out;
        }
        let i = rng.random_range(0..n * n);
        let shift = rng.random_range(1..n);
        out.second[i] = (out.second[i] + shift) % n;
        out
    }
}

/// Outcome of the exhaustive braid-relation check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct YbeCheck {
    pub holds: bool,
    /// First `(x, y, z)` in lexicographic order where the two sides differ.
    pub witness: Option<(usize, usize, usize)>,
}

/// `(id × r)(r × id)(id × r) = (r × id)(id × r)(r × id)` on all triples.
pub fn check_ybe(s: &Solution) -> YbeCheck {
    let n = s.size;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (y1, z1) = s.apply(y, z);
                let (x2, y2) = s.apply(x, y1);
                let (y3, z3) = s.apply(y2, z1);
                let left = (x2, y3, z3);

                let (x1, y1) = s.apply(x, y);
                let (y2, z2) = s.apply(y1, z);
                let (x3, y3) = s.apply(x1, y2);
                let right = (x3, y3, z2);
                if left != right {
                    return YbeCheck { holds: false, witness: Some((x, y, z)) };
                }
            }
        }
    }
    YbeCheck { holds: true, witness: None }
}

fn is_permutation(values: &[usize]) -> bool {
    let mut seen = vec![false; values.len()];
    values.iter().all(|&v| v < values.len() && !std::mem::replace(&mut seen[v], true))
}

/// `(σ_x, τ_y bijective for all x, y; r² = id)`.
pub fn check_nondegenerate_involutive(s: &Solution) -> (bool, bool) {
    let n = s.size;
    let nondegenerate = (0..n).all(|x| is_permutation(&s.sigma(x)) && is_permutation(&s.tau(x)));
    let involutive = (0..n).all(|x| {
        (0..n).all(|y| {
            let (u, v) = s.apply(x, y);
            s.apply(u, v) == (x, y)
        })
    });
    (nondegenerate, involutive)
}

/// `r(x, y) = (λ_x(y), \overline{λ_x(y)} ∘ x ∘ y)`, checked to be a
/// non-degenerate solution.
pub fn canonical_solution(b: &SkewBrace) -> Result<Solution> {
    let s = Solution::from_fn(b.order(), |x, y| {
        let l = b.lambda(x, y);
        (l, b.circ(b.circ(b.bar(l), x), y))
    })?;
    if let Some(w) = check_ybe(&s).witness {
        return Err(Error::InternalInconsistency(format!("canonical solution fails the braid relation at {w:?}")));
    }
    if !check_nondegenerate_involutive(&s).0 {
        return Err(Error::InternalInconsistency("canonical solution is degenerate".into()));
    }
    Ok(s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct YbeSummary {
    pub holds: bool,
    pub nondegenerate: bool,
    pub involutive: bool,
}

pub fn summarize(s: &Solution) -> YbeSummary {
    let (nondegenerate, involutive) = check_nondegenerate_involutive(s);
    YbeSummary { holds: check_ybe(s).holds, nondegenerate, involutive }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::trivial_brace;
    use crate::catalog;
    use crate::named::{b4, op_s3};

    #[test]
    fn flip_is_an_involutive_solution() {
        let f = Solution::flip(5);
        assert!(check_ybe(&f).holds);
        assert_eq!(check_nondegenerate_involutive(&f), (true, true));
    }

    #[test]
    fn shifted_flip_still_solves() {
        // Lyubashenko type: σ = id and τ = shift commute.
        let s = Solution::from_fn(5, |x, y| (y, (x + 1) % 5)).unwrap();
        assert!(check_ybe(&s).holds);
        assert_eq!(check_nondegenerate_involutive(&s), (true, false));
    }

    #[test]
    fn non_commuting_permutations_fail() {
        let s = Solution::from_fn(3, |x, y| ((y + 1) % 3, [0, 2, 1][x])).unwrap();
        let c = check_ybe(&s);
        assert!(!c.holds);
        assert!(c.witness.is_some());
    }

    #[test]
    fn constant_map_is_degenerate() {
        let s = Solution::from_fn(2, |x, _| (0, x)).unwrap();
        assert_eq!(check_nondegenerate_involutive(&s), (false, false));
    }

    #[test]
    fn canonical_solutions() {
        let t = canonical_solution(&trivial_brace(&catalog::cyclic(4))).unwrap();
        assert_eq!(t, Solution::flip(4));
        let s = canonical_solution(&b4()).unwrap();
        assert_eq!(check_nondegenerate_involutive(&s), (true, true));
        let o = canonical_solution(&op_s3()).unwrap();
        assert_eq!(check_nondegenerate_involutive(&o), (true, false));
    }

    #[test]
    fn corruption_breaks_the_braid_relation() {
        let s = canonical_solution(&b4()).unwrap();
        let bad = s.corrupted(7);
        assert_ne!(bad, s);
        let c = check_ybe(&bad);
        assert!(!c.holds);
        assert!(c.witness.is_some());
    }
}
