use crate::error::{Error, Result};
use crate::spaces::{Cochain, ModuleHom, PModule};
use crate::xmod::SkeletalGrCat;

use super::group::CohGroup;

/// `f∘c` for an equivariant module map `f: A → B`.
pub fn pushforward_class(f: &ModuleHom, source: &PModule, target: &PModule, c: &Cochain) -> Result<Cochain> {
    f.check_equivariant(source, target)?;
    if c.factors() != source.factors() {
        return Err(Error::malformed("cochain is not valued in the source module"));
    }
    let mut out = Cochain::zero(c.p_order(), target, c.degree());
    for i in 0..c.len() {
        out.set_index(i, &f.apply(target, c.at_index(i)));
    }
    Ok(out)
}

/// `δ(f) = [f∘assoc]` in `H³(π₀H; G)`, as class coordinates of `h3`.
pub fn delta_obstruction(f: &ModuleHom, h: &SkeletalGrCat, h3: &CohGroup) -> Result<Vec<u64>> {
    if h3.degree() != 3 || h3.group().order() != h.p.order() {
        return Err(Error::malformed("δ needs H³ of π₀ of the gr-category"));
    }
    let pushed = pushforward_class(f, &h.a, h3.module(), &h.assoc)?;
    Ok(h3.classify_unchecked(&pushed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GroupTable;
    use crate::cohomology::{coboundary, cohomology_group};
    use crate::Caps;

    #[test]
    fn pushforward_commutes_with_d() {
        let z2 = GroupTable::cyclic(2);
        let a4 = PModule::trivial(2, vec![4]).unwrap();
        let a2 = PModule::trivial(2, vec![2]).unwrap();
        let f = ModuleHom::new(&a4, &a2, &[vec![1]]).unwrap();
        let c = Cochain::from_entries(2, &a4, 2, &[(vec![1, 1], vec![3])]).unwrap();
        let lhs = coboundary(&z2, &a2, &pushforward_class(&f, &a4, &a2, &c).unwrap());
        let rhs = pushforward_class(&f, &a4, &a2, &coboundary(&z2, &a4, &c)).unwrap();
        assert_eq!(lhs, rhs);
        let zero = ModuleHom::zero(&a4, &a2);
        assert!(pushforward_class(&zero, &a4, &a2, &c).unwrap().is_zero());
    }

    #[test]
    fn delta_of_identity_is_k() {
        let z2 = GroupTable::cyclic(2);
        let a = PModule::trivial(2, vec![2]).unwrap();
        let k = Cochain::from_entries(2, &a, 3, &[(vec![1, 1, 1], vec![1])]).unwrap();
        let h = SkeletalGrCat { p: z2.clone(), a: a.clone(), assoc: k };
        let h3 = cohomology_group(&z2, &a, 3, &Caps::default()).unwrap();
        assert_eq!(delta_obstruction(&ModuleHom::identity(&a), &h, &h3).unwrap(), vec![1]);
        assert_eq!(delta_obstruction(&ModuleHom::zero(&a, &a), &h, &h3).unwrap(), vec![0]);
    }

    #[test]
    fn non_equivariant_rejected() {
        let z2 = GroupTable::cyclic(2);
        let tw = PModule::new(&z2, vec![3], &[vec![vec![1]], vec![vec![-1]]]).unwrap();
        let triv = PModule::trivial(2, vec![3]).unwrap();
        let f = ModuleHom::new(&tw, &triv, &[vec![1]]).unwrap();
        let c = Cochain::zero(2, &tw, 1);
        assert!(matches!(pushforward_class(&f, &tw, &triv, &c), Err(Error::NotEquivariant { .. })));
    }
}
