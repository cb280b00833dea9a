//! Brute-force oracles that work directly on raw tables and share no code
//! with the algorithms they check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use skewbrace::corpus::generate_corpus;
use skewbrace::SkewBrace;

pub type Table = Vec<Vec<usize>>;

pub fn corpus() -> Vec<(String, SkewBrace)> {
    generate_corpus()
        .expect("corpus builds")
        .into_iter()
        .map(|(doc, b)| (doc.name, b))
        .collect()
}

pub fn inverse(t: &Table, x: usize) -> usize {
    (0..t.len()).find(|&y| t[x][y] == 0).expect("group element has an inverse")
}

/// `x∘(y+z) = x∘y − x + x∘z` on all triples.
pub fn satisfies_brace_axiom(add: &Table, circ: &Table) -> bool {
    let n = add.len();
    (0..n).all(|x| {
        let nx = inverse(add, x);
        (0..n).all(|y| (0..n).all(|z| circ[x][add[y][z]] == add[add[circ[x][y]][nx]][circ[x][z]]))
    })
}

/// Every group table on `0..n` with identity `0`: reduced Latin squares
/// filled cell by cell, kept if associative.
pub fn all_group_tables(n: usize) -> Vec<Table> {
    let mut t = vec![vec![usize::MAX; n]; n];
    for i in 0..n {
        t[0][i] = i;
        t[i][0] = i;
    }
    let mut out = Vec::new();
    fill(&mut t, 1, 1, &mut out);
    out.retain(|t| {
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a][b]][c] == t[a][t[b][c]])))
    });
    out
}

fn fill(t: &mut Table, r: usize, c: usize, out: &mut Vec<Table>) {
    let n = t.len();
    if r == n {
        out.push(t.clone());
        return;
    }
    let (nr, nc) = if c + 1 == n { (r + 1, 1) } else { (r, c + 1) };
    for v in 0..n {
        let row_ok = (0..c).all(|j| t[r][j] != v);
        let col_ok = (0..r).all(|i| t[i][c] != v);
        if row_ok && col_ok {
            t[r][c] = v;
            fill(t, nr, nc, out);
            t[r][c] = usize::MAX;
        }
    }
}

/// All brace `∘` tables over a fixed `+` table.
pub fn all_brace_circ_tables(add: &Table) -> BTreeSet<Table> {
    all_group_tables(add.len()).into_iter().filter(|c| satisfies_brace_axiom(add, c)).collect()
}

pub fn members(n: usize, bits: u64) -> Vec<usize> {
    (0..n).filter(|&i| bits >> i & 1 == 1).collect()
}

fn is_subgroup(t: &Table, s: &[usize]) -> bool {
    s.contains(&0) && s.iter().all(|&a| s.iter().all(|&b| s.contains(&t[a][inverse(t, b)])))
}

fn is_normal(t: &Table, s: &[usize]) -> bool {
    let n = t.len();
    (0..n).all(|g| s.iter().all(|&x| s.contains(&t[t[g][x]][inverse(t, g)])))
}

/// Ideals by the definition, scanning all subsets containing `0`.
pub fn ideals_by_definition(add: &Table, circ: &Table) -> Vec<u64> {
    let n = add.len();
    assert!(n <= 16, "subset scan is exponential");
    let lambda = |x: usize, y: usize| add[inverse(add, x)][circ[x][y]];
    (0..1u64 << n)
        .filter(|bits| bits & 1 == 1)
        .filter(|&bits| {
            let s = members(n, bits);
            is_subgroup(add, &s)
                && is_normal(add, &s)
                && is_subgroup(circ, &s)
                && is_normal(circ, &s)
                && (0..n).all(|x| s.iter().all(|&y| s.contains(&lambda(x, y))))
        })
        .collect()
}

/// Subgroup of `(A,+)` generated by `−a − b + a + b`, `a ∈ I`, `b ∈ J`.
pub fn group_commutator_subgroup(add: &Table, i: &[usize], j: &[usize]) -> BTreeSet<usize> {
    let mut s: BTreeSet<usize> = BTreeSet::from([0]);
    for &a in i {
        for &b in j {
            let (na, nb) = (inverse(add, a), inverse(add, b));
            s.insert(add[add[add[na][nb]][a]][b]);
        }
    }
    loop {
        let next: BTreeSet<usize> = s.iter().flat_map(|&a| s.iter().map(move |&b| add[a][b])).chain(s.iter().copied()).collect();
        if next == s {
            return s;
        }
        s = next;
    }
}

/// Braid relation by direct composition of maps on triples.
pub fn braid_relation_holds(n: usize, r: impl Fn(usize, usize) -> (usize, usize)) -> bool {
    let r12 = |(a, b, c): (usize, usize, usize)| {
        let (x, y) = r(a, b);
        (x, y, c)
    };
    let r23 = |(a, b, c): (usize, usize, usize)| {
        let (y, z) = r(b, c);
        (a, y, z)
    };
    (0..n).all(|x| {
        (0..n).all(|y| (0..n).all(|z| r23(r12(r23((x, y, z)))) == r12(r23(r12((x, y, z))))))
    })
}

/// `S_3` by composing permutations of `{0,1,2}` written out by hand.
pub fn s3_by_permutations() -> Table {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    perms
        .iter()
        .map(|p| perms.iter().map(|q| index([p[q[0]], p[q[1]], p[q[2]]])).collect())
        .collect()
}

/// Whether two group tables are isomorphic, by trying every bijection fixing 0.
pub fn groups_isomorphic_brute(a: &Table, b: &Table) -> bool {
    let n = a.len();
    if b.len() != n {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    permutations_fixing_zero(&mut perm, 1, &mut |p| {
        (0..n).all(|x| (0..n).all(|y| p[a[x][y]] == b[p[x]][p[y]]))
    })
}

fn permutations_fixing_zero(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k >= perm.len() {
        return f(perm);
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        if permutations_fixing_zero(perm, k + 1, f) {
            perm.swap(k, i);
            return true;
        }
        perm.swap(k, i);
    }
    false
}
