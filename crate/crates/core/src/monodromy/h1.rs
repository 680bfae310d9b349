use std::collections::BTreeSet;

use crate::algebra::{enumerate_homs, structure, GroupHom, GroupTable, Quotient, SourceGroup};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::xmod::CrossedModule;

use super::pointed::PointedSet;

/// `Hom(π₁, G)/G` under `φ ~ ad(g)∘φ`. Each class is represented by its
/// lexicographically smallest member, and the classes are listed in that
/// order, so the trivial homomorphism is the basepoint at index 0.
pub fn h1_nonabelian(pi1: &SourceGroup, g: &GroupTable, caps: &Caps) -> Result<PointedSet<GroupHom>> {
    let homs = enumerate_homs(pi1, g, caps)?;
    let reps: BTreeSet<GroupHom> = homs
        .iter()
        .map(|h| (0..g.order()).map(|x| h.conjugate(x, g)).min().expect("nonempty group"))
        .collect();
    Ok(PointedSet { elements: reps.into_iter().collect(), basepoint: 0 })
}

/// Locally constant stacks with a centerless stalk `G`: classified by
/// `H¹(π₁; Out(G))`, returned as homomorphisms into the `Out(G)` table of
/// [`structure`].
pub fn stack_classes_centerless(pi1: &SourceGroup, g: &GroupTable, caps: &Caps) -> Result<PointedSet<GroupHom>> {
    let s = structure(g, caps)?;
    if s.center.len() > 1 {
        return Err(Error::malformed("stalk group has a nontrivial center"));
    }
    h1_nonabelian(pi1, &s.out.table, caps)
}

/// `Hom(π₁, ker d) ⋊ coker d`. Element `(φ, c)` has index
/// `i·|coker d| + c` where `φ = homs[i]`; `homs` take values in the `ker`
/// table of [`CrossedModule::ker_coker`].
#[derive(Clone, Debug)]
pub struct CrossedH0 {
    pub table: GroupTable,
    pub homs: Vec<GroupHom>,
    pub ker: GroupTable,
    pub ker_embedding: Vec<usize>,
    pub coker: Quotient,
}

impl CrossedH0 {
    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn index(&self, hom: usize, coker: usize) -> usize {
        hom * self.coker.table.order() + coker
    }

    pub fn split(&self, x: usize) -> (usize, usize) {
        let c = self.coker.table.order();
        (x / c, x % c)
    }
}

/// `H⁰(X; G⁻¹ → G⁰)`. The cokernel acts on `ker d` through any lift to
/// `G⁰`, which is well defined because `ker d` is central and the image of
/// `d` acts by conjugation.
pub fn h0_crossed(pi1: &SourceGroup, x: &CrossedModule, caps: &Caps) -> Result<CrossedH0> {
    let kc = x.ker_coker();
    let homs = enumerate_homs(pi1, &kc.ker, caps)?;
    let nc = kc.coker.table.order();
    let n = homs.len() * nc;
    Caps::check("crossed H0 table order", n as u128, caps.table_order as u128)?;

    let mut ker_pos = vec![usize::MAX; x.g1.order()];
    for (i, &h) in kc.ker_embedding.iter().enumerate() {
        ker_pos[h] = i;
    }
    let act = |c: usize, k: usize| ker_pos[x.act(kc.coker.transversal[c], kc.ker_embedding[k])];
    let position = |h: &GroupHom| homs.binary_search(h).expect("closed under the action and products");

    // (c·φ) and φ·ψ, both as hom indices
    let acted: Vec<Vec<usize>> = (0..nc)
        .map(|c| {
            homs.iter()
                .map(|h| position(&GroupHom { images: h.images.iter().map(|&k| act(c, k)).collect() }))
                .collect()
        })
        .collect();
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        let (phi, c) = (a / nc, a % nc);
        for b in 0..n {
            let (psi, c2) = (b / nc, b % nc);
            let moved = &homs[acted[c][psi]].images;
            let prod = GroupHom {
                images: homs[phi].images.iter().zip(moved).map(|(&u, &v)| kc.ker.mul(u, v)).collect(),
            };
            mul.push(position(&prod) * nc + kc.coker.table.mul(c, c2));
        }
    }
    Ok(CrossedH0 {
        table: GroupTable::from_mul_unchecked(n, mul),
        homs,
        ker: kc.ker,
        ker_embedding: kc.ker_embedding,
        coker: kc.coker,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Presentation;
    use crate::xmod::adjoint_crossed_module;

    fn z() -> SourceGroup {
        SourceGroup::Presentation(Presentation::free(1))
    }

    #[test]
    fn h1_counts() {
        let caps = Caps::default();
        assert_eq!(h1_nonabelian(&z(), &GroupTable::symmetric(3), &caps).unwrap().len(), 3);
        let trivial = SourceGroup::Table(GroupTable::trivial());
        assert_eq!(h1_nonabelian(&trivial, &GroupTable::symmetric(3), &caps).unwrap().len(), 1);
        let z2 = SourceGroup::Table(GroupTable::cyclic(2));
        let h = h1_nonabelian(&z2, &GroupTable::cyclic(2), &caps).unwrap();
        assert_eq!(h.len(), 2);
        assert!(h.base().is_trivial());
    }

    #[test]
    fn h1_of_free_group_on_two() {
        // commuting-pair classes of S3: 18 pairs / conjugation = 8
        let f2 = SourceGroup::Presentation(Presentation::new(2, vec![vec![1, 2, -1, -2]]).unwrap());
        assert_eq!(h1_nonabelian(&f2, &GroupTable::symmetric(3), &Caps::default()).unwrap().len(), 8);
    }

    #[test]
    fn centerless_stacks() {
        let caps = Caps::default();
        let z2 = SourceGroup::Table(GroupTable::cyclic(2));
        assert_eq!(stack_classes_centerless(&z2, &GroupTable::symmetric(3), &caps).unwrap().len(), 1);
        assert_eq!(stack_classes_centerless(&z2, &GroupTable::alternating4(), &caps).unwrap().len(), 2);
        assert!(stack_classes_centerless(&z2, &GroupTable::cyclic(3), &caps).is_err());
    }

    #[test]
    fn h0_examples() {
        let caps = Caps::default();
        let s3 = adjoint_crossed_module(&GroupTable::symmetric(3), &caps).unwrap();
        assert_eq!(h0_crossed(&z(), &s3, &caps).unwrap().order(), 1);
        let z4 = adjoint_crossed_module(&GroupTable::cyclic(4), &caps).unwrap();
        let h = h0_crossed(&z(), &z4, &caps).unwrap();
        assert_eq!(h.order(), 8);
        assert!(!h.table.is_abelian());
        let trivial = SourceGroup::Table(GroupTable::trivial());
        let q8 = adjoint_crossed_module(&GroupTable::quaternion(), &caps).unwrap();
        assert_eq!(h0_crossed(&trivial, &q8, &caps).unwrap().order(), 6);
    }
}
