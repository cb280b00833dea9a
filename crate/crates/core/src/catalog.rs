//! Small groups used throughout the tests and the corpus.

use std::collections::HashMap;

use crate::group::FiniteGroup;

/// `Z_n` with `a + b mod n`.
pub fn cyclic(n: usize) -> FiniteGroup {
    FiniteGroup::from_fn(n, |a, b| (a + b) % n).expect("cyclic group")
}

/// `G × H` with `(g, h)` stored at `g + |G| h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let m = g.order();
    FiniteGroup::from_fn(m * h.order(), |a, b| {
        g.op(a % m, b % m) + m * h.op(a / m, b / m)
    })
    .expect("direct product")
}

/// Elementary abelian group `Z_p^k`.
pub fn elementary_abelian(p: usize, k: u32) -> FiniteGroup {
    (1..k).fold(cyclic(p), |acc, _| direct_product(&acc, &cyclic(p)))
}

/// Group generated by permutations, composed as `(p q)(i) = p(q(i))`.
/// The identity permutation becomes element `0`; the rest are sorted.
pub fn from_permutations(generators: &[Vec<usize>]) -> FiniteGroup {
    let degree = generators.first().map_or(0, Vec::len);
    let identity: Vec<usize> = (0..degree).collect();
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
    let mut i = 0;
    while i < elements.len() {
        for g in generators {
            let prod: Vec<usize> = (0..degree).map(|x| elements[i][g[x]]).collect();
            if !index.contains_key(&prod) {
                index.insert(prod.clone(), elements.len());
                elements.push(prod);
            }
        }
        i += 1;
    }
    elements[1..].sort();
    let index: HashMap<&Vec<usize>, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let compose = |a: usize, b: usize| {
        let prod: Vec<usize> = (0..degree).map(|x| elements[a][elements[b][x]]).collect();
        index[&prod]
    };
    FiniteGroup::from_fn(elements.len(), compose).expect("permutation group")
}

/// Symmetric group on `k` letters (`k ≤ 4`).
pub fn symmetric(k: usize) -> FiniteGroup {
    assert!((1..=4).contains(&k), "symmetric groups beyond S4 exceed the catalog");
    if k == 1 {
        return FiniteGroup::trivial();
    }
    let mut transposition: Vec<usize> = (0..k).collect();
    transposition.swap(0, 1);
    let cycle: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
    from_permutations(&[transposition, cycle])
}

pub fn symmetric3() -> FiniteGroup {
    symmetric(3)
}

/// Dihedral group of order `2m`; `r^i s^j` is stored at `i + m j`.
pub fn dihedral(m: usize) -> FiniteGroup {
    FiniteGroup::from_fn(2 * m, |a, b| {
        let (i1, j1) = (a % m, a / m);
        let (i2, j2) = (b % m, b / m);
        let i = if j1 == 0 { (i1 + i2) % m } else { (i1 + m - i2) % m };
        i + m * ((j1 + j2) % 2)
    })
    .expect("dihedral group")
}

/// Quaternion group; `±u` for `u ∈ {1, i, j, k}` is stored at `2u + [sign is −]`.
pub fn quaternion8() -> FiniteGroup {
    // unit products: (sign flip, unit) for u1 * u2
    const UNITS: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    FiniteGroup::from_fn(8, |a, b| {
        let (flip, u) = UNITS[a / 2][b / 2];
        2 * u + ((a % 2) ^ (b % 2) ^ flip)
    })
    .expect("quaternion group")
}

/// All groups of order at most six, one per isomorphism type, with names.
pub fn groups_up_to_six() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("Z1", FiniteGroup::trivial()),
        ("Z2", cyclic(2)),
        ("Z3", cyclic(3)),
        ("Z4", cyclic(4)),
        ("Z2xZ2", elementary_abelian(2, 2)),
        ("Z5", cyclic(5)),
        ("Z6", cyclic(6)),
        ("S3", symmetric3()),
    ]
}
