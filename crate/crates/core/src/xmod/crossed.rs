use crate::algebra::{structure, GroupTable, Quotient};
use crate::caps::Caps;
use crate::error::{Error, Result};

/// A crossed module `d: G₋₁ → G₀` with a left action of `G₀` on `G₋₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModule {
    pub g1: GroupTable,
    pub g0: GroupTable,
    pub d: Vec<usize>,
    /// `action[g][h]` is `ᵍh`.
    pub action: Vec<Vec<usize>>,
}

/// `ker d` (central in `G₋₁`) and `coker d`.
#[derive(Clone, Debug)]
pub struct KerCoker {
    pub ker: GroupTable,
    /// Element of `G₋₁` for each element of `ker`.
    pub ker_embedding: Vec<usize>,
    pub coker: Quotient,
}

impl CrossedModule {
    /// Checks the action and both crossed-module axioms on all pairs.
    pub fn validate(g1: GroupTable, g0: GroupTable, d: Vec<usize>, action: Vec<Vec<usize>>) -> Result<Self> {
        let (n1, n0) = (g1.order(), g0.order());
        if d.len() != n1 || d.iter().any(|&x| x >= n0) {
            return Err(Error::malformed("d must list one element of g0 per element of g1"));
        }
        if !g1.is_hom_to(&g0, &d) {
            return Err(Error::malformed("d is not a homomorphism"));
        }
        if action.len() != n0 || action.iter().any(|row| row.len() != n1 || row.iter().any(|&h| h >= n1)) {
            return Err(Error::ActionInvalid(format!("action must be a {n0}x{n1} table")));
        }
        for (g, row) in action.iter().enumerate() {
            let mut seen = vec![false; n1];
            if row.iter().any(|&h| std::mem::replace(&mut seen[h], true)) {
                return Err(Error::ActionInvalid(format!("{g} does not act bijectively")));
            }
            if !g1.is_hom_to(&g1, row) {
                return Err(Error::ActionInvalid(format!("{g} does not act by a homomorphism")));
            }
        }
        if action[0].iter().enumerate().any(|(h, &x)| h != x) {
            return Err(Error::ActionInvalid("identity does not act trivially".into()));
        }
        for a in 0..n0 {
            for b in 0..n0 {
                let ab = g0.mul(a, b);
                if (0..n1).any(|h| action[ab][h] != action[a][action[b][h]]) {
                    return Err(Error::ActionInvalid(format!("action of {a}·{b} differs from the composite")));
                }
            }
        }
        for g in 0..n0 {
            for h in 0..n1 {
                if d[action[g][h]] != g0.conj(g, d[h]) {
                    return Err(Error::AxiomIViolated { g, h });
                }
            }
        }
        for h_tilde in 0..n1 {
            for h in 0..n1 {
                if action[d[h_tilde]][h] != g1.conj(h_tilde, h) {
                    return Err(Error::AxiomIIViolated { h_tilde, h });
                }
            }
        }
        Ok(CrossedModule { g1, g0, d, action })
    }

    pub fn act(&self, g: usize, h: usize) -> usize {
        self.action[g][h]
    }

    pub fn image(&self) -> Vec<usize> {
        let mut im = self.d.clone();
        im.sort();
        im.dedup();
        im
    }

    pub fn ker_coker(&self) -> KerCoker {
        let ker_elems: Vec<usize> = (0..self.g1.order()).filter(|&h| self.d[h] == 0).collect();
        assert!(
            ker_elems.iter().all(|&k| (0..self.g1.order()).all(|h| self.g1.mul(k, h) == self.g1.mul(h, k))),
            "ker d is not central"
        );
        let (ker, ker_embedding) = self.g1.subgroup_table(&ker_elems);
        let coker = self.g0.quotient(&self.image());
        KerCoker { ker, ker_embedding, coker }
    }
}

/// `G → Aut(G)`, `g ↦ ad(g)`, with `Aut(G)` acting on `G`.
pub fn adjoint_crossed_module(g: &GroupTable, caps: &Caps) -> Result<CrossedModule> {
    let s = structure(g, caps)?;
    Ok(CrossedModule {
        g1: g.clone(),
        g0: s.aut.clone(),
        d: s.ad.clone(),
        action: s.automorphisms.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity_action(n0: usize, n1: usize) -> Vec<Vec<usize>> {
        vec![(0..n1).collect(); n0]
    }

    #[test]
    fn zero_map_trivial_action() {
        let z2 = GroupTable::cyclic(2);
        let x = CrossedModule::validate(z2.clone(), z2, vec![0, 0], identity_action(2, 2)).unwrap();
        let kc = x.ker_coker();
        assert_eq!((kc.ker.order(), kc.coker.table.order()), (2, 2));
    }

    #[test]
    fn identity_with_inversion_fails_axiom_one() {
        let z4 = GroupTable::cyclic(4);
        let inv: Vec<Vec<usize>> = (0..4).map(|g| (0..4).map(|h| if g % 2 == 1 { (4 - h) % 4 } else { h }).collect()).collect();
        assert!(matches!(
            CrossedModule::validate(z4.clone(), z4.clone(), vec![0, 1, 2, 3], inv),
            Err(Error::AxiomIViolated { .. })
        ));
        assert!(CrossedModule::validate(z4.clone(), z4, vec![0, 1, 2, 3], identity_action(4, 4)).is_ok());
    }

    #[test]
    fn axiom_two_failure() {
        // S3 → 1 with trivial action: ^{d h~}h = h but conjugation moves h
        let s3 = GroupTable::symmetric(3);
        assert!(matches!(
            CrossedModule::validate(s3, GroupTable::trivial(), vec![0; 6], identity_action(1, 6)),
            Err(Error::AxiomIIViolated { .. })
        ));
    }

    #[test]
    fn bad_action() {
        let z2 = GroupTable::cyclic(2);
        assert!(matches!(
            CrossedModule::validate(z2.clone(), z2, vec![0, 0], vec![vec![0, 1], vec![0, 0]]),
            Err(Error::ActionInvalid(_))
        ));
    }

    #[test]
    fn adjoint_modules() {
        let caps = Caps::default();
        for (g, ker, coker) in [
            (GroupTable::cyclic(2), 2, 1),
            (GroupTable::symmetric(3), 1, 1),
            (GroupTable::cyclic(4), 4, 2),
            (GroupTable::dihedral(4), 2, 2),
            (GroupTable::quaternion(), 2, 6),
        ] {
            let x = adjoint_crossed_module(&g, &caps).unwrap();
            let x = CrossedModule::validate(x.g1, x.g0, x.d, x.action).unwrap();
            let kc = x.ker_coker();
            assert_eq!((kc.ker.order(), kc.coker.table.order()), (ker, coker));
        }
    }
}
