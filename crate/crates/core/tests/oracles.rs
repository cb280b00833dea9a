mod common;

use common::*;
use skewbrace::commutator::{
    absorbing_lower_bound, congruence_generated, delta_commutator, ideal_partition, is_congruence, smith_commutator,
    DeltaMethod,
};
use skewbrace::enumeration::automorphisms;
use skewbrace::substructures::{all_ideals, distinguished_sets};
use skewbrace::{catalog, make_group, ElementSet, FiniteGroup};

#[test]
fn catalog_s3_matches_hand_composed_permutations() {
    let oracle = s3_by_permutations();
    let oracle_group = make_group(&oracle).unwrap().group;
    assert!(!oracle_group.is_abelian());
    assert!(groups_isomorphic_brute(&oracle, &catalog::symmetric3().rows()));
    assert!(groups_isomorphic_brute(&oracle, &catalog::symmetric(3).rows()));
    assert!(groups_isomorphic_brute(&oracle, &catalog::dihedral(3).rows()));
    assert!(!groups_isomorphic_brute(&oracle, &catalog::cyclic(6).rows()));
}

#[test]
fn group_tables_of_small_order() {
    // Group tables on {0..n-1} with identity 0: n = 4 gives the 3 labelings of
    // Z4 and the single labeling of the Klein group.
    assert_eq!(all_group_tables(3).len(), 1);
    let four = all_group_tables(4);
    assert_eq!(four.len(), 4);
    let klein = catalog::elementary_abelian(2, 2).rows();
    assert_eq!(four.iter().filter(|t| groups_isomorphic_brute(t, &klein)).count(), 1);
}

#[test]
fn ideals_match_subset_scan() {
    for (name, b) in corpus().into_iter().filter(|(_, b)| b.order() <= 12) {
        let expected: Vec<u64> = ideals_by_definition(&b.add_rows(), &b.circ_rows());
        let mut got: Vec<u64> = all_ideals(&b).iter().map(|s| s.bits()).collect();
        got.sort_unstable();
        assert_eq!(got, expected, "{name}");
    }
}

#[test]
fn both_delta_methods_agree_on_the_corpus() {
    for (name, b) in corpus().into_iter().filter(|(_, b)| b.order() <= 9) {
        let ideals = all_ideals(&b);
        for i in &ideals {
            for j in &ideals {
                assert_eq!(
                    delta_commutator(&b, i, j, DeltaMethod::Congruence).unwrap(),
                    delta_commutator(&b, i, j, DeltaMethod::IdealOfPairs).unwrap(),
                    "{name}: [{i}, {j}]"
                );
            }
        }
    }
}

#[test]
fn principal_congruences_are_ideal_cosets() {
    for (name, b) in corpus().into_iter().filter(|(_, b)| b.order() <= 12) {
        for x in 0..b.order() {
            let p = congruence_generated(&b, &[(0, x)]);
            assert!(is_congruence(&b, &p), "{name}");
            let class_of_zero = ElementSet::filter(b.order(), |y| p.related(0, y));
            assert_eq!(p, ideal_partition(&b, &class_of_zero), "{name}: ({x}, 0)");
        }
    }
}

#[test]
fn absorbing_bound_sits_below_the_commutator() {
    for (name, b) in corpus().into_iter().filter(|(_, b)| b.order() <= 6) {
        let all = ElementSet::full(b.order());
        let bound = absorbing_lower_bound(&b, &all, &all, 3000);
        let upper = smith_commutator(&b, &all, &all).unwrap();
        assert!(bound.set.is_subset(&upper), "{name}: {} ⊄ {upper}", bound.set);
    }
}

#[test]
fn commutator_is_monotone_and_inside_the_intersection() {
    for (name, b) in corpus() {
        let ideals = all_ideals(&b);
        let table: Vec<Vec<ElementSet>> = ideals
            .iter()
            .map(|i| ideals.iter().map(|j| smith_commutator(&b, i, j).unwrap()).collect())
            .collect();
        for (a, i) in ideals.iter().enumerate() {
            for (c, j) in ideals.iter().enumerate() {
                assert!(table[a][c].is_subset(&i.intersection(j)), "{name}");
                for (a2, i2) in ideals.iter().enumerate() {
                    for (c2, j2) in ideals.iter().enumerate() {
                        if i.is_subset(i2) && j.is_subset(j2) {
                            assert!(table[a][c].is_subset(&table[a2][c2]), "{name}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn automorphisms_match_brute_force_count() {
    for g in [catalog::cyclic(5), catalog::cyclic(6), catalog::symmetric3(), catalog::elementary_abelian(2, 2)] {
        let n = g.order();
        let rows = g.rows();
        let mut count = 0;
        let mut perm: Vec<usize> = (0..n).collect();
        count_automorphisms(&rows, &mut perm, 1, &mut count);
        assert_eq!(automorphisms(&g).unwrap().len(), count);
    }
}

fn count_automorphisms(t: &Table, perm: &mut Vec<usize>, k: usize, count: &mut usize) {
    let n = t.len();
    if k == n {
        if (0..n).all(|x| (0..n).all(|y| perm[t[x][y]] == t[perm[x]][perm[y]])) {
            *count += 1;
        }
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        count_automorphisms(t, perm, k + 1, count);
        perm.swap(k, i);
    }
}

#[test]
fn center_is_what_commutes_with_everything() {
    for (name, b) in corpus() {
        let n = b.order();
        let add = b.add_rows();
        let circ = b.circ_rows();
        let expected = ElementSet::filter(n, |x| {
            (0..n).all(|y| add[x][y] == add[y][x] && circ[x][y] == add[x][y] && circ[y][x] == add[y][x])
        });
        assert_eq!(distinguished_sets(&b).unwrap().zeta, expected, "{name}");
    }
}

#[test]
fn groups_reject_broken_tables() {
    assert!(FiniteGroup::new(&[vec![0, 1], vec![1, 1]]).is_err());
    assert!(FiniteGroup::new(&[vec![0, 1, 2], vec![1, 2, 0], vec![2, 1, 0]]).is_err());
}
