//! Acceptance suite: one line per criterion, non-zero exit on any failure.
//! Run with `cargo test -p skewbrace --test acceptance`.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use common::*;
use skewbrace::brace::verify_identities;
use skewbrace::commutator::smith_commutator;
use skewbrace::constructions::{bilinear_brace, extract_cocycles, rebuild_from_cocycles};
use skewbrace::corpus::{run_conjecture_suite, write_corpus};
use skewbrace::enumeration::{classify_up_to_iso, enumerate_braces_on};
use skewbrace::isomorphism::{braces_isomorphic, is_isomorphism};
use skewbrace::series::{lower_central_series, nilpotency_report, upper_central_series};
use skewbrace::substructures::{all_ideals, distinguished_sets, ideal_closure, star_product, sum_set};
use skewbrace::terms::{check_translation_lemma, random_star_free_term, Assignments, TermShape};
use skewbrace::ybe::{canonical_solution, check_nondegenerate_involutive, check_ybe, Solution};
use skewbrace::{catalog, named, trivial_brace, ElementSet, FiniteGroup, SkewBrace};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_identities(corpus: &[(String, SkewBrace)]) -> Outcome {
    for (name, b) in corpus {
        let r = verify_identities(b);
        if let Some(c) = r.checks.iter().find(|c| !c.passed) {
            return Err(format!("{name}: {} fails at {:?}", c.name, c.witness));
        }
        ensure(satisfies_brace_axiom(&b.add_rows(), &b.circ_rows()), || format!("{name}: oracle axiom"))?;
    }
    Ok(format!("{} braces, all identities exhaustively", corpus.len()))
}

fn c2_zeta_gamma(corpus: &[(String, SkewBrace)]) -> Outcome {
    let mut nilpotent = 0;
    for (name, b) in corpus {
        let zeta = upper_central_series(b).map_err(|e| format!("{name}: {e}"))?;
        let gamma = lower_central_series(b, &ElementSet::full(b.order()));
        let n = zeta.stages.iter().position(|s| s.is_full());
        let m = gamma.stages.iter().position(|s| s.is_trivial());
        ensure(n == m, || format!("{name}: ζ reaches A at {n:?}, Γ reaches 0 at {m:?}"))?;
        nilpotent += usize::from(n.is_some());
    }
    Ok(format!("{} braces, {nilpotent} centrally nilpotent", corpus.len()))
}

fn c3_finite_case(corpus: &[(String, SkewBrace)]) -> Outcome {
    for (name, b) in corpus {
        let r = nilpotency_report(b).map_err(|e| format!("{name}: {e}"))?;
        let [a, bb, c] = r.finite_case;
        ensure(a == bb && bb == c, || format!("{name}: conditions {:?}", r.finite_case))?;
    }
    Ok(format!("{} braces", corpus.len()))
}

fn c4_lower_bound(corpus: &[(String, SkewBrace)]) -> Outcome {
    let mut pairs = 0;
    for (name, b) in corpus {
        let ideals = all_ideals(b);
        for i in &ideals {
            for j in &ideals {
                let raw = sum_set(
                    b,
                    &sum_set(b, &star_product(b, i, j), &star_product(b, j, i)),
                    &b.add_group().commutator_set(i, j),
                );
                let lower = ideal_closure(b, &raw);
                let upper = smith_commutator(b, i, j).map_err(|e| format!("{name}: {e}"))?;
                ensure(lower.is_subset(&upper), || format!("{name}: {lower} ⊄ [{i},{j}] = {upper}"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} ideal pairs"))
}

fn c5_center(corpus: &[(String, SkewBrace)]) -> Outcome {
    for (name, b) in corpus {
        // Join of central ideals from the commutator, against ζ from the tables.
        let n = b.order();
        let add = b.add_rows();
        let circ = b.circ_rows();
        let zeta = ElementSet::filter(n, |x| {
            (0..n).all(|y| add[x][y] == add[y][x] && circ[x][y] == add[x][y] && circ[y][x] == add[x][y])
        });
        let mut join = ElementSet::zero(n);
        for i in all_ideals(b) {
            if smith_commutator(b, &ElementSet::full(n), &i).map_err(|e| format!("{name}: {e}"))?.is_trivial() {
                join = join.union(&i);
            }
        }
        ensure(join == zeta, || format!("{name}: central ideals join to {join}, ζ = {zeta}"))?;
        let lib = skewbrace::commutator::largest_central_ideal(b).map_err(|e| format!("{name}: {e}"))?;
        ensure(lib == zeta, || format!("{name}: largest_central_ideal {lib}"))?;
    }
    Ok(format!("{} braces", corpus.len()))
}

fn is_trivial_or_opposite(b: &SkewBrace) -> bool {
    let n = b.order();
    let (add, circ) = (b.add_rows(), b.circ_rows());
    (0..n).all(|x| (0..n).all(|y| circ[x][y] == add[x][y])) || (0..n).all(|x| (0..n).all(|y| circ[x][y] == add[y][x]))
}

fn c6_group_oracle(corpus: &[(String, SkewBrace)]) -> Outcome {
    let mut braces = 0;
    let mut pairs = 0;
    for (name, b) in corpus.iter().filter(|(_, b)| is_trivial_or_opposite(b)) {
        braces += 1;
        let add = b.add_rows();
        let ideals = all_ideals(b);
        for i in &ideals {
            for j in &ideals {
                let group = group_commutator_subgroup(&add, &i.members(), &j.members());
                let expected = ideal_closure(b, &ElementSet::from_members(b.order(), group));
                let got = smith_commutator(b, i, j).map_err(|e| format!("{name}: {e}"))?;
                ensure(got == expected, || format!("{name}: [{i},{j}] = {got}, group oracle {expected}"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{braces} trivial/opposite braces, {pairs} ideal pairs"))
}

fn c7_round_trip(corpus: &[(String, SkewBrace)]) -> Outcome {
    let mut count = 0;
    for (name, b) in corpus {
        if distinguished_sets(b).map_err(|e| format!("{name}: {e}"))?.zeta.is_trivial() {
            continue;
        }
        let ext = extract_cocycles(b).map_err(|e| format!("{name}: {e}"))?;
        let rebuilt = rebuild_from_cocycles(&ext.quotient, &ext.kernel, &ext.cocycles).map_err(|e| format!("{name}: {e}"))?;
        let f = braces_isomorphic(b, &rebuilt).ok_or_else(|| format!("{name}: rebuilt brace not isomorphic"))?;
        ensure(is_isomorphism(b, &rebuilt, &f), || format!("{name}: returned map is not an isomorphism"))?;
        // Compatibility identity, recomputed from the tables.
        let q = &ext.quotient;
        let k = &ext.kernel;
        let (th, ph) = (&ext.cocycles.theta, &ext.cocycles.phi);
        let nq = q.order();
        let kadd = |a: usize, c: usize| k.op(a, c);
        let ksub = |a: usize, c: usize| k.op(a, k.inv(c));
        for x in 0..nq {
            for y in 0..nq {
                for z in 0..nq {
                    let xy = q.circ(x, y);
                    let xz = q.circ(x, z);
                    let nx = q.neg(x);
                    let lhs = ksub(ksub(ph[x][q.add(y, z)], ph[x][y]), ph[x][z]);
                    let rhs = ksub(ksub(kadd(th[q.add(xy, nx)][xz], th[xy][nx]), th[x][nx]), th[y][z]);
                    ensure(lhs == rhs, || format!("{name}: compatibility fails at ({x},{y},{z})"))?;
                }
            }
        }
        count += 1;
    }
    Ok(format!("{count} braces with nontrivial center"))
}

fn class_of(b: &SkewBrace) -> Option<usize> {
    nilpotency_report(b).ok().and_then(|r| r.centrally_nilpotent_class)
}

fn c8_classes(corpus: &[(String, SkewBrace)]) -> Outcome {
    let find = |name: &str| corpus.iter().find(|(n, _)| n == name).map(|(_, b)| b.clone()).unwrap();
    ensure(class_of(&named::b4()) == Some(2), || "B4 class".into())?;
    let h8 = find("Heis8");
    ensure(class_of(&h8) == Some(2), || "Heis8 class".into())?;
    let zeta = distinguished_sets(&h8).map_err(|e| e.to_string())?.zeta;
    ensure(zeta.len() == 2, || format!("Heis8 ζ = {zeta}"))?;

    let z2 = catalog::cyclic(2);
    let z3 = catalog::cyclic(3);
    let prod = |n: usize| -> Vec<Vec<usize>> { (0..n).map(|x| (0..n).map(|y| x * y % n).collect()).collect() };
    let over_b4: Vec<Vec<usize>> = (0..4).map(|x| (0..4).map(|y| (x / 2) * (y / 2)).collect()).collect();
    let cases: Vec<(&str, SkewBrace, &FiniteGroup, Vec<Vec<usize>>)> = vec![
        ("Z2 by Z2", trivial_brace(&z2), &z2, prod(2)),
        ("Z3 by Z3", trivial_brace(&z3), &z3, prod(3)),
        ("B4 by Z2", named::b4(), &z2, over_b4),
        ("Z3 by Z2, zero", trivial_brace(&z3), &z2, vec![vec![0; 3]; 3]),
    ];
    let mut lines = Vec::new();
    for (label, h, k, theta) in cases {
        let b = bilinear_brace(&h, k, &theta).map_err(|e| format!("{label}: {e}"))?;
        let (base, ext) = (class_of(&h), class_of(&b));
        ensure(matches!((base, ext), (Some(c), Some(e)) if e <= c + 1), || format!("{label}: {ext:?} vs {base:?}"))?;
        lines.push(format!("{label} {}→{}", base.unwrap(), ext.unwrap()));
    }
    Ok(format!("B4 2, Heis8 2 with |ζ| = 2; {}", lines.join(", ")))
}

fn c9_ybe(corpus: &[(String, SkewBrace)]) -> Outcome {
    for (name, b) in corpus {
        let s = canonical_solution(b).map_err(|e| format!("{name}: {e}"))?;
        ensure(check_ybe(&s).holds, || format!("{name}: braid relation"))?;
        ensure(braid_relation_holds(b.order(), |x, y| s.apply(x, y)), || format!("{name}: oracle braid relation"))?;
        ensure(check_nondegenerate_involutive(&s).0, || format!("{name}: degenerate"))?;
    }
    let flip = Solution::flip(6);
    ensure(check_ybe(&flip).holds, || "flip rejected".into())?;
    let base = canonical_solution(&named::op_s3()).map_err(|e| e.to_string())?;
    let bad = base.corrupted(2024);
    let c = check_ybe(&bad);
    let w = c.witness.ok_or_else(|| "corrupted solution accepted".to_string())?;
    ensure(!braid_relation_holds(6, |x, y| bad.apply(x, y)), || "oracle accepts corrupted".into())?;
    Ok(format!("{} canonical solutions; flip accepted; corrupted rejected at {w:?}", corpus.len()))
}

fn c10_enumeration() -> Outcome {
    let groups = [
        ("Z1", catalog::cyclic(1)),
        ("Z2", catalog::cyclic(2)),
        ("Z3", catalog::cyclic(3)),
        ("Z4", catalog::cyclic(4)),
        ("Z2xZ2", catalog::elementary_abelian(2, 2)),
    ];
    let mut summary = Vec::new();
    for (name, g) in groups {
        let family = classify_up_to_iso(enumerate_braces_on(&g).map_err(|e| format!("{name}: {e}"))?);
        let found: BTreeSet<Vec<Vec<usize>>> = family.braces.iter().map(|b| b.circ_rows()).collect();
        ensure(found.len() == family.braces.len(), || format!("{name}: duplicates"))?;
        let oracle = all_brace_circ_tables(&g.rows());
        ensure(found == oracle, || format!("{name}: λ-search {} vs oracle {}", found.len(), oracle.len()))?;
        for (i, b) in family.braces.iter().enumerate() {
            let rep = &family.braces[family.iso_classes[family.class_of[i]]];
            ensure(braces_isomorphic(rep, b).is_some(), || format!("{name}: brace {i} not in its class"))?;
        }
        for (a, &r) in family.iso_classes.iter().enumerate() {
            for &s in &family.iso_classes[a + 1..] {
                ensure(braces_isomorphic(&family.braces[r], &family.braces[s]).is_none(), || {
                    format!("{name}: representatives {r}, {s} isomorphic")
                })?;
            }
        }
        summary.push(format!("{name} {}/{}", family.braces.len(), family.iso_classes.len()));
    }
    Ok(format!("braces/classes: {}", summary.join(", ")))
}

fn c11_translation(corpus: &[(String, SkewBrace)]) -> Outcome {
    let mut terms = 0;
    for (name, b) in corpus.iter().filter(|(_, b)| b.order() <= 8) {
        let shape = TermShape { arity: 2, max_depth: 6, constants: b.order() };
        for seed in 0..1000u64 {
            let var = (seed % 2) as usize;
            let t = random_star_free_term(seed, shape, var);
            check_translation_lemma(b, &t, var, Assignments::All)
                .map_err(|e| format!("{name}, seed {seed}, term {t}: {e}"))?;
            terms += 1;
        }
    }
    Ok(format!("{terms} terms, zero failures"))
}

fn c12_conjectures() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    write_corpus(dir.path()).map_err(|e| e.to_string())?;
    let s = run_conjecture_suite(dir.path()).map_err(|e| e.to_string())?;
    ensure(s.exit_code() == 0, || format!("exit code {}", s.exit_code()))?;
    let t = &s.totals;
    Ok(format!(
        "{} braces, exit 0; holds on Fix∩kerλ ideal {}, Γ left ideals {}, Γ ideals {}, commutator equality {}, raw sum ideal {}",
        t.braces, t.fix_ker_lambda_ideal, t.gamma_left_ideals, t.gamma_ideals, t.commutator_equality, t.raw_sum_ideal
    ))
}

fn main() {
    let start = Instant::now();
    let corpus = corpus();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("1 identities", Box::new(|| c1_identities(&corpus))),
        ("2 ζ/Γ class equality", Box::new(|| c2_zeta_gamma(&corpus))),
        ("3 finite-case agreement", Box::new(|| c3_finite_case(&corpus))),
        ("4 commutator lower bound", Box::new(|| c4_lower_bound(&corpus))),
        ("5 largest central ideal", Box::new(|| c5_center(&corpus))),
        ("6 group commutator oracle", Box::new(|| c6_group_oracle(&corpus))),
        ("7 extension round trip", Box::new(|| c7_round_trip(&corpus))),
        ("8 bilinear/Heisenberg classes", Box::new(|| c8_classes(&corpus))),
        ("9 Yang-Baxter", Box::new(|| c9_ybe(&corpus))),
        ("10 enumeration oracle", Box::new(c10_enumeration)),
        ("11 translation fuzz", Box::new(|| c11_translation(&corpus))),
        ("12 conjecture suite", Box::new(c12_conjectures)),
    ];
    let mut failed = 0;
    for (label, run) in &criteria {
        let t = Instant::now();
        match run() {
            Ok(detail) => println!("PASS criterion {label}: {detail} [{:.2?}]", t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {label}: {why} [{:.2?}]", t.elapsed());
            }
        }
    }
    println!("acceptance: {} of {} criteria passed in {:.2?}", criteria.len() - failed, criteria.len(), start.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
