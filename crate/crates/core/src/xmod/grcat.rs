use std::collections::HashMap;

use crate::algebra::{AbelianDecomposition, GroupTable};
use crate::cohomology::coboundary;
use crate::error::{Error, Result};
use crate::spaces::{n_tuples, tuple_at, Cochain, PModule, TwoType};

use super::crossed::{CrossedModule, KerCoker};

/// A skeletal gr-category: group of objects `p`, automorphisms of the unit
/// `a` as a `p`-module, and a normalized associator 3-cocycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeletalGrCat {
    pub p: GroupTable,
    pub a: PModule,
    pub assoc: Cochain,
}

impl SkeletalGrCat {
    pub fn new(p: GroupTable, a: PModule, assoc: Cochain) -> Result<Self> {
        let d = coboundary(&p, &a, &assoc);
        if let Some((tuple, _)) = d.entries().into_iter().next() {
            return Err(Error::NotACocycle(tuple));
        }
        Ok(SkeletalGrCat { p, a, assoc })
    }
}

/// `Π₁(ΩX)` for a 2-type: objects `π₁`, unit automorphisms `π₂`,
/// associator `k`.
pub fn gr_cat_from_two_type(t: &TwoType) -> SkeletalGrCat {
    SkeletalGrCat { p: t.pi1.clone(), a: t.pi2.clone(), assoc: t.k.clone() }
}

/// The gr-category of a crossed module, made skeletal through the
/// minimal-index section `s` of `G₀ → coker d`. With `h(p,q)` the smallest
/// preimage of `s(p)s(q)s(pq)⁻¹`, the associator is
/// `ˢ⁽ᵖ⁾h(q,r) · h(p,qr) · (h(p,q) · h(pq,r))⁻¹` in `ker d`.
pub fn gr_cat_from_crossed_module(x: &CrossedModule) -> Result<(SkeletalGrCat, AbelianDecomposition, KerCoker)> {
    let kc = x.ker_coker();
    let dec = AbelianDecomposition::new(&kc.ker)?;
    let ker_pos: HashMap<usize, usize> = kc.ker_embedding.iter().enumerate().map(|(i, &h)| (h, i)).collect();
    let coords_of = |h: usize| dec.coords(ker_pos[&h]).to_vec();

    let q = &kc.coker;
    let p = q.table.clone();
    let s = &q.transversal;
    let matrices: Vec<Vec<Vec<i64>>> = s
        .iter()
        .map(|&g| {
            let cols: Vec<Vec<u64>> = dec.generators.iter().map(|&e| coords_of(x.act(g, kc.ker_embedding[e]))).collect();
            (0..dec.factors.len())
                .map(|i| cols.iter().map(|c| c[i] as i64).collect())
                .collect()
        })
        .collect();
    let a = PModule::new(&p, dec.factors.clone(), &matrices)?;

    let mut preimage = vec![usize::MAX; x.g0.order()];
    for h in (0..x.g1.order()).rev() {
        preimage[x.d[h]] = h;
    }
    let g1 = &x.g1;
    let g0 = &x.g0;
    let h = |a: usize, b: usize| {
        let t = g0.mul(g0.mul(s[a], s[b]), g0.inv(s[p.mul(a, b)]));
        preimage[t]
    };
    let n = p.order();
    let mut assoc = Cochain::zero(n, &a, 3);
    for idx in 0..n_tuples(n, 3) {
        let t = tuple_at(n, 3, idx);
        let (u, v, w) = (t[0], t[1], t[2]);
        let lhs = g1.mul(x.act(s[u], h(v, w)), h(u, p.mul(v, w)));
        let rhs = g1.mul(h(u, v), h(p.mul(u, v), w));
        let k = g1.mul(lhs, g1.inv(rhs));
        assoc.set_index(idx, &coords_of(k));
    }
    let grcat = SkeletalGrCat::new(p, a, assoc)?;
    Ok((grcat, dec, kc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::cohomology::cohomology_group;
    use crate::xmod::adjoint_crossed_module;

    #[test]
    fn adjoint_grcats_are_coherent() {
        let caps = Caps::default();
        for g in [
            GroupTable::cyclic(4),
            GroupTable::dihedral(4),
            GroupTable::quaternion(),
            GroupTable::cyclic(2).product(&GroupTable::cyclic(2)),
        ] {
            let x = adjoint_crossed_module(&g, &caps).unwrap();
            let (h, dec, _) = gr_cat_from_crossed_module(&x).unwrap();
            assert_eq!(h.p.order() * g.order(), x.g0.order() * dec.factors.iter().product::<u64>() as usize);
        }
    }

    #[test]
    fn one_object_case() {
        // Z/2 → 1 has π₀ trivial and unit automorphisms Z/2
        let z2 = GroupTable::cyclic(2);
        let x = CrossedModule::validate(z2, GroupTable::trivial(), vec![0, 0], vec![vec![0, 1]]).unwrap();
        let (h, _, _) = gr_cat_from_crossed_module(&x).unwrap();
        assert_eq!(h.p.order(), 1);
        assert_eq!(h.a.factors(), &[2]);
    }

    #[test]
    fn nonzero_associator_is_detected() {
        // Z/4 →(×2) Z/4, odd elements acting by inversion: ker = Z/2,
        // coker = Z/2, and the associator is the nonzero class of H³(Z/2; Z/2).
        let z4 = GroupTable::cyclic(4);
        let action: Vec<Vec<usize>> =
            (0..4).map(|g| (0..4).map(|h| if g % 2 == 1 { (4 - h) % 4 } else { h }).collect()).collect();
        let x = CrossedModule::validate(z4.clone(), z4, vec![0, 2, 0, 2], action).unwrap();
        let (h, _, _) = gr_cat_from_crossed_module(&x).unwrap();
        let h3 = cohomology_group(&h.p, &h.a, 3, &Caps::default()).unwrap();
        assert_eq!(h3.classify(&h.assoc).unwrap(), vec![1]);
    }

    #[test]
    fn from_two_type_passthrough() {
        let z2 = GroupTable::cyclic(2);
        let a = PModule::trivial(2, vec![2]).unwrap();
        let t = TwoType::split(z2, a);
        let h = gr_cat_from_two_type(&t);
        assert!(h.assoc.is_zero());
    }
}
