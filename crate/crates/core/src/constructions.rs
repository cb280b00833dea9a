//! Braces built from smaller data: bilinear central extensions, generalized
//! Heisenberg braces, and the decomposition of a brace with nontrivial
//! center into a quotient, the center, and a pair of cocycles.

use serde::{Deserialize, Serialize};

use crate::brace::SkewBrace;
use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::group::{self, FiniteGroup};
use crate::isomorphism::braces_isomorphic;
use crate::series::nilpotency_report;
use crate::substructures::{distinguished_sets, fix, ker_lambda};

fn check_table(table: &[Vec<usize>], rows: usize, cols: usize, values: usize, what: &str) -> Result<()> {
    if table.len() != rows || table.iter().any(|r| r.len() != cols) {
        return Err(Error::PreconditionViolated(format!("{what} must be a {rows}×{cols} table")));
    }
    for r in table {
        for &v in r {
            if v >= values {
                return Err(Error::ConstantOutOfRange { value: v, order: values });
            }
        }
    }
    Ok(())
}

fn build(order: usize, add: impl Fn(usize, usize) -> usize, circ: impl Fn(usize, usize) -> usize) -> Result<SkewBrace> {
    let add = FiniteGroup::from_fn(order, add)?;
    let circ = FiniteGroup::from_fn(order, circ)?;
    SkewBrace::new(add, circ)
}

fn as_inconsistency(context: &str) -> impl Fn(Error) -> Error + '_ {
    move |e| match e {
        Error::InternalInconsistency(m) => Error::InternalInconsistency(m),
        other => Error::InternalInconsistency(format!("{context}: {other}")),
    }
}

/// Checks `θ(h₁ ∗ h₂, y) = θ(h₁, y) + θ(h₂, y)` and the same in the second
/// argument, for `∗` each of `h_ops`.
fn check_biadditive(
    rows: usize,
    cols: usize,
    theta: &[Vec<usize>],
    k: &FiniteGroup,
    row_ops: &[&dyn Fn(usize, usize) -> usize],
    col_ops: &[&dyn Fn(usize, usize) -> usize],
) -> Result<()> {
    for op in row_ops {
        for x in 0..rows {
            for y in 0..rows {
                for z in 0..cols {
                    if theta[op(x, y)][z] != k.op(theta[x][z], theta[y][z]) {
                        return Err(Error::NotBilinear { x, y, z });
                    }
                }
            }
        }
    }
    for op in col_ops {
        for x in 0..rows {
            for y in 0..cols {
                for z in 0..cols {
                    if theta[x][op(y, z)] != k.op(theta[x][y], theta[x][z]) {
                        return Err(Error::NotBilinear { x, y, z });
                    }
                }
            }
        }
    }
    Ok(())
}

/// `K × H` with `(k₁,h₁) + (k₂,h₂) = (k₁+k₂, h₁+h₂)` and
/// `(k₁,h₁) ∘ (k₂,h₂) = (k₁+k₂+θ(h₁,h₂), h₁∘h₂)`. The pair `(k, h)` is
/// encoded as `k + |K|·h`.
pub fn bilinear_brace(h: &SkewBrace, k: &FiniteGroup, theta: &[Vec<usize>]) -> Result<SkewBrace> {
    if !k.is_abelian() {
        return Err(Error::KNotAbelian);
    }
    let (m, q) = (k.order(), h.order());
    check_table(theta, q, q, m, "θ")?;
    let hadd = |x: usize, y: usize| h.add(x, y);
    let hcirc = |x: usize, y: usize| h.circ(x, y);
    check_biadditive(q, q, theta, k, &[&hadd, &hcirc], &[&hadd, &hcirc])?;

    let split = |x: usize| (x % m, x / m);
    let b = build(
        m * q,
        |x, y| {
            let ((k1, h1), (k2, h2)) = (split(x), split(y));
            k.op(k1, k2) + m * h.add(h1, h2)
        },
        |x, y| {
            let ((k1, h1), (k2, h2)) = (split(x), split(y));
            k.op(k.op(k1, k2), theta[h1][h2]) + m * h.circ(h1, h2)
        },
    )
    .map_err(as_inconsistency("bilinear extension is not a brace"))?;

    let kernel = ElementSet::filter(m * q, |x| x < m);
    let bound = ker_lambda(&b).intersection(&fix(&b)).intersection(&b.add_group().center());
    if !kernel.is_subset(&bound) {
        return Err(Error::InternalInconsistency(format!(
            "K × {{0}} = {kernel} is not inside ker λ ∩ Fix ∩ Z(A,+) = {bound}"
        )));
    }
    if let Some(base) = nilpotency_report(h)?.centrally_nilpotent_class {
        let class = nilpotency_report(&b)?.centrally_nilpotent_class;
        if class.is_none_or(|c| c > base + 1) {
            return Err(Error::InternalInconsistency(format!(
                "extension class {class:?} exceeds base class {base} + 1"
            )));
        }
    }
    Ok(b)
}

/// `E × F × A` with componentwise `+` and
/// `(e₁,f₁,a₁) ∘ (e₂,f₂,a₂) = (e₁+e₂, f₁+f₂, a₁+a₂+ω(e₁,f₂))`, the triple
/// encoded as `e + |E|·f + |E||F|·a`.
pub fn heisenberg_brace(e: &FiniteGroup, f: &FiniteGroup, a: &FiniteGroup, omega: &[Vec<usize>]) -> Result<SkewBrace> {
    for (g, name) in [(e, "E"), (f, "F"), (a, "A")] {
        if !g.is_abelian() {
            return Err(Error::PreconditionViolated(format!("{name} must be abelian")));
        }
    }
    let (ne, nf, na) = (e.order(), f.order(), a.order());
    check_table(omega, ne, nf, na, "ω")?;
    let eop = |x: usize, y: usize| e.op(x, y);
    let fop = |x: usize, y: usize| f.op(x, y);
    check_biadditive(ne, nf, omega, a, &[&eop], &[&fop])?;

    let split = |x: usize| (x % ne, (x / ne) % nf, x / (ne * nf));
    let join = |p: usize, q: usize, r: usize| p + ne * q + ne * nf * r;
    let b = build(
        ne * nf * na,
        |x, y| {
            let ((e1, f1, a1), (e2, f2, a2)) = (split(x), split(y));
            join(e.op(e1, e2), f.op(f1, f2), a.op(a1, a2))
        },
        |x, y| {
            let ((e1, f1, a1), (e2, f2, a2)) = (split(x), split(y));
            join(e.op(e1, e2), f.op(f1, f2), a.op(a.op(a1, a2), omega[e1][f2]))
        },
    )
    .map_err(as_inconsistency("Heisenberg product is not a brace"))?;

    let class = nilpotency_report(&b)?.centrally_nilpotent_class;
    let degenerate = omega.iter().flatten().all(|&v| v == 0);
    let expected_ok = match class {
        Some(1) => degenerate || ne * nf * na == 1,
        Some(0) => ne * nf * na == 1,
        Some(2) => !degenerate,
        _ => false,
    };
    if !expected_ok {
        return Err(Error::InternalInconsistency(format!(
            "Heisenberg brace has class {class:?} (ω zero: {degenerate})"
        )));
    }
    Ok(b)
}

/// Normalized cocycles of a central extension `0 → K → B → Q → 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cocycles {
    pub quotient_order: usize,
    pub kernel_order: usize,
    /// `t(x) + t(y) = t(x + y) + θ(x, y)`.
    pub theta: Vec<Vec<usize>>,
    /// `t(x) ∘ t(y) = t(x ∘ y) ∘ φ(x, y)`.
    pub phi: Vec<Vec<usize>>,
    /// Least member of each coset.
    pub transversal: Vec<usize>,
}

/// The output of [`extract_cocycles`]. Kernel element `i` is
/// `kernel_members[i]` in the original brace.
#[derive(Debug, Clone)]
pub struct Extension {
    pub quotient: SkewBrace,
    pub kernel: FiniteGroup,
    pub kernel_members: Vec<usize>,
    pub cocycles: Cocycles,
}

/// Cocycle identities over `(Q,+)` and `(Q,∘)`, normalization, and the
/// compatibility condition with the brace axiom.
pub fn check_cocycles(q: &SkewBrace, k: &FiniteGroup, c: &Cocycles) -> Result<()> {
    let (nq, m) = (q.order(), k.order());
    if c.quotient_order != nq || c.kernel_order != m {
        return Err(Error::PreconditionViolated(format!(
            "cocycles are for |Q| = {}, |K| = {}; got |Q| = {nq}, |K| = {m}",
            c.quotient_order, c.kernel_order
        )));
    }
    if !k.is_abelian() {
        return Err(Error::KNotAbelian);
    }
    check_table(&c.theta, nq, nq, m, "θ")?;
    check_table(&c.phi, nq, nq, m, "φ")?;
    let (th, ph) = (&c.theta, &c.phi);
    let kadd = |a: usize, b: usize| k.op(a, b);
    let ksub = |a: usize, b: usize| k.op(a, k.inv(b));
    for x in 0..nq {
        if th[0][x] != 0 || th[x][0] != 0 {
            return Err(Error::CocycleIdentityFails { which: "θ normalization", x, y: 0, z: 0 });
        }
        if ph[0][x] != 0 || ph[x][0] != 0 {
            return Err(Error::CocycleIdentityFails { which: "φ normalization", x, y: 0, z: 0 });
        }
    }
    for x in 0..nq {
        for y in 0..nq {
            for z in 0..nq {
                if kadd(th[x][y], th[q.add(x, y)][z]) != kadd(th[y][z], th[x][q.add(y, z)]) {
                    return Err(Error::CocycleIdentityFails { which: "θ", x, y, z });
                }
                if kadd(ph[x][y], ph[q.circ(x, y)][z]) != kadd(ph[y][z], ph[x][q.circ(y, z)]) {
                    return Err(Error::CocycleIdentityFails { which: "φ", x, y, z });
                }
            }
        }
    }
    for x in 0..nq {
        let nx = q.neg(x);
        for y in 0..nq {
            let xy = q.circ(x, y);
            for z in 0..nq {
                let xz = q.circ(x, z);
                let lhs = ksub(ksub(ph[x][q.add(y, z)], ph[x][y]), ph[x][z]);
                let rhs = ksub(ksub(kadd(th[q.sub(xy, x)][xz], th[xy][nx]), th[x][nx]), th[y][z]);
                if lhs != rhs {
                    return Err(Error::CompatibilityFails { x, y, z });
                }
            }
        }
    }
    Ok(())
}

/// Splits `B` over its center: `B ≅ B/ζ(B) × ζ(B)` with operations twisted
/// by the returned cocycles. The round trip through
/// [`rebuild_from_cocycles`] is checked to be isomorphic to `B`.
pub fn extract_cocycles(b: &SkewBrace) -> Result<Extension> {
    let zeta = distinguished_sets(b)?.zeta;
    if zeta.is_trivial() {
        return Err(Error::TrivialCenter);
    }
    let (quotient, projection) = b.quotient(&zeta)?;
    let (kernel, kernel_members) = b.add_group().subgroup(&zeta)?;
    let mut rank = vec![usize::MAX; b.order()];
    for (i, &z) in kernel_members.iter().enumerate() {
        rank[z] = i;
    }
    let nq = quotient.order();
    let t = group::representatives(&projection, nq);
    let in_kernel = |v: usize| -> Result<usize> {
        match rank[v] {
            usize::MAX => Err(Error::InternalInconsistency(format!("cocycle value {v} outside the center"))),
            r => Ok(r),
        }
    };
    let mut theta = vec![vec![0; nq]; nq];
    let mut phi = vec![vec![0; nq]; nq];
    for x in 0..nq {
        for y in 0..nq {
            let s = b.add(b.neg(t[quotient.add(x, y)]), b.add(t[x], t[y]));
            let c = b.circ(b.bar(t[quotient.circ(x, y)]), b.circ(t[x], t[y]));
            theta[x][y] = in_kernel(s)?;
            phi[x][y] = in_kernel(c)?;
        }
    }
    let cocycles = Cocycles { quotient_order: nq, kernel_order: kernel.order(), theta, phi, transversal: t };
    check_cocycles(&quotient, &kernel, &cocycles).map_err(as_inconsistency("extracted cocycles"))?;
    let rebuilt = rebuild_from_cocycles(&quotient, &kernel, &cocycles)?;
    if braces_isomorphic(b, &rebuilt).is_none() {
        return Err(Error::InternalInconsistency("rebuilt extension is not isomorphic to the input".into()));
    }
    Ok(Extension { quotient, kernel, kernel_members, cocycles })
}

/// `Q × K` with `(x,a) + (y,b) = (x+y, a+b+θ(x,y))` and
/// `(x,a) ∘ (y,b) = (x∘y, a+b+φ(x,y))`, the pair encoded as `a + |K|·x`.
pub fn rebuild_from_cocycles(q: &SkewBrace, k: &FiniteGroup, c: &Cocycles) -> Result<SkewBrace> {
    check_cocycles(q, k, c)?;
    let m = k.order();
    let b = build(
        q.order() * m,
        |u, v| {
            let ((x, a), (y, bb)) = ((u / m, u % m), (v / m, v % m));
            k.op(k.op(a, bb), c.theta[x][y]) + m * q.add(x, y)
        },
        |u, v| {
            let ((x, a), (y, bb)) = ((u / m, u % m), (v / m, v % m));
            k.op(k.op(a, bb), c.phi[x][y]) + m * q.circ(x, y)
        },
    )
    .map_err(as_inconsistency("rebuilt extension is not a brace"))?;
    let kernel = ElementSet::filter(b.order(), |u| u < m);
    if !crate::commutator::is_central_ideal(&b, &kernel)? {
        return Err(Error::InternalInconsistency(format!("{{0}} × K = {kernel} is not a central ideal")));
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::trivial_brace;
    use crate::catalog;
    use crate::named::b4;

    fn product_table(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|x| (0..n).map(|y| x * y % n).collect()).collect()
    }

    #[test]
    fn bilinear_over_z2_is_b4() {
        let h = trivial_brace(&catalog::cyclic(2));
        let b = bilinear_brace(&h, &catalog::cyclic(2), &product_table(2)).unwrap();
        assert!(braces_isomorphic(&b, &b4()).is_some());
        assert_eq!(nilpotency_report(&b).unwrap().centrally_nilpotent_class, Some(2));
    }

    #[test]
    fn zero_bilinear_map_gives_direct_product() {
        let h = trivial_brace(&catalog::cyclic(3));
        let b = bilinear_brace(&h, &catalog::cyclic(2), &vec![vec![0; 3]; 3]).unwrap();
        assert!(braces_isomorphic(&b, &trivial_brace(&catalog::cyclic(6))).is_some());
        assert_eq!(nilpotency_report(&b).unwrap().centrally_nilpotent_class, Some(1));
    }

    #[test]
    fn bilinear_over_z3() {
        let h = trivial_brace(&catalog::cyclic(3));
        let b = bilinear_brace(&h, &catalog::cyclic(3), &product_table(3)).unwrap();
        assert_eq!(b.order(), 9);
        assert_eq!(nilpotency_report(&b).unwrap().centrally_nilpotent_class, Some(2));
    }

    #[test]
    fn non_bilinear_and_non_abelian_inputs() {
        let h = trivial_brace(&catalog::cyclic(2));
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(bilinear_brace(&h, &catalog::cyclic(2), &bad), Err(Error::NotBilinear { .. })));
        assert_eq!(
            bilinear_brace(&h, &catalog::symmetric3(), &vec![vec![0; 2]; 2]).unwrap_err(),
            Error::KNotAbelian
        );
    }

    #[test]
    fn heisenberg_examples() {
        let z2 = catalog::cyclic(2);
        let b = heisenberg_brace(&z2, &z2, &z2, &product_table(2)).unwrap();
        assert_eq!(b.order(), 8);
        assert!(!b.circ_group().is_abelian());
        let circ_orders: Vec<usize> = (0..8).map(|x| b.circ_group().element_order(x)).collect();
        assert_eq!(circ_orders.iter().filter(|&&o| o == 4).count(), 2);
        let r = nilpotency_report(&b).unwrap();
        assert_eq!(r.centrally_nilpotent_class, Some(2));
        assert_eq!(distinguished_sets(&b).unwrap().zeta.members(), vec![0, 4]);

        let flat = heisenberg_brace(&z2, &z2, &z2, &vec![vec![0; 2]; 2]).unwrap();
        assert_eq!(nilpotency_report(&flat).unwrap().centrally_nilpotent_class, Some(1));

        let z3 = catalog::cyclic(3);
        let h27 = heisenberg_brace(&z3, &z3, &z3, &product_table(3)).unwrap();
        assert_eq!(nilpotency_report(&h27).unwrap().centrally_nilpotent_class, Some(2));
    }

    #[test]
    fn b4_round_trip() {
        let ext = extract_cocycles(&b4()).unwrap();
        assert_eq!((ext.cocycles.quotient_order, ext.cocycles.kernel_order), (2, 2));
        let rebuilt = rebuild_from_cocycles(&ext.quotient, &ext.kernel, &ext.cocycles).unwrap();
        assert!(braces_isomorphic(&rebuilt, &b4()).is_some());
    }

    #[test]
    fn abelian_trivial_brace_has_trivial_quotient() {
        let ext = extract_cocycles(&trivial_brace(&catalog::cyclic(4))).unwrap();
        assert_eq!(ext.cocycles.quotient_order, 1);
        assert_eq!(ext.cocycles.theta, vec![vec![0]]);
    }

    #[test]
    fn trivial_center_is_rejected() {
        assert_eq!(extract_cocycles(&crate::named::op_s3()).unwrap_err(), Error::TrivialCenter);
    }

    #[test]
    fn heisenberg_cocycles() {
        let z2 = catalog::cyclic(2);
        let b = heisenberg_brace(&z2, &z2, &z2, &product_table(2)).unwrap();
        let ext = extract_cocycles(&b).unwrap();
        assert_eq!((ext.cocycles.quotient_order, ext.cocycles.kernel_order), (4, 2));
    }

    #[test]
    fn zero_cocycles_rebuild_direct_product() {
        let q = trivial_brace(&catalog::cyclic(3));
        let k = catalog::cyclic(2);
        let c = Cocycles {
            quotient_order: 3,
            kernel_order: 2,
            theta: vec![vec![0; 3]; 3],
            phi: vec![vec![0; 3]; 3],
            transversal: vec![0, 1, 2],
        };
        let b = rebuild_from_cocycles(&q, &k, &c).unwrap();
        assert!(braces_isomorphic(&b, &trivial_brace(&catalog::cyclic(6))).is_some());
    }

    #[test]
    fn corrupted_theta_is_rejected() {
        let z2 = catalog::cyclic(2);
        let b = heisenberg_brace(&z2, &z2, &z2, &product_table(2)).unwrap();
        let mut ext = extract_cocycles(&b).unwrap();
        ext.cocycles.theta[1][2] ^= 1;
        match rebuild_from_cocycles(&ext.quotient, &ext.kernel, &ext.cocycles) {
            Err(Error::CocycleIdentityFails { which: "θ", .. }) => {}
            other => panic!("expected θ failure, got {other:?}"),
        }
    }
}
