use std::collections::HashMap;

use crate::caps::Caps;
use crate::error::Result;

use super::group::{GroupTable, Quotient};

/// Center, automorphisms, inner and outer automorphisms of a finite group.
#[derive(Clone, Debug)]
pub struct Structure {
    /// Sorted elements of `Z(G)`.
    pub center: Vec<usize>,
    /// `Aut(G)` with composition `(αβ)(x) = α(β(x))`.
    pub aut: GroupTable,
    /// `automorphisms[i]` is the permutation of `G` for `aut` element `i`.
    pub automorphisms: Vec<Vec<usize>>,
    /// `ad[g]` is the index in `aut` of `x ↦ g x g⁻¹`.
    pub ad: Vec<usize>,
    /// Sorted indices of `Inn(G)` in `aut`.
    pub inn: Vec<usize>,
    /// `Out(G) = Aut(G)/Inn(G)`.
    pub out: Quotient,
}

impl Structure {
    pub fn apply(&self, aut: usize, x: usize) -> usize {
        self.automorphisms[aut][x]
    }

    pub fn aut_index(&self, perm: &[usize]) -> Option<usize> {
        self.automorphisms.binary_search_by(|p| p.as_slice().cmp(perm)).ok()
    }

    /// Smallest `g` with `ad(g) = aut`, if `aut` is inner.
    pub fn inner_preimage(&self, aut: usize) -> Option<usize> {
        self.ad.iter().position(|&a| a == aut)
    }
}

/// Brute-force `Aut(G)`: images of a greedy generating set range over
/// elements of matching order and are kept when they extend to a bijective
/// homomorphism.
pub fn structure(g: &GroupTable, caps: &Caps) -> Result<Structure> {
    Caps::check("order for Aut enumeration", g.order() as u128, caps.aut_order as u128)?;
    let n = g.order();
    let gens = g.generating_set();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let ord = g.element_order(s);
            (0..n).filter(|&x| g.element_order(x) == ord).collect()
        })
        .collect();

    let mut automorphisms = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    let radices: Vec<usize> = candidates.iter().map(Vec::len).collect();
    loop {
        let images: Vec<usize> = choice.iter().zip(&candidates).map(|(&c, cs)| cs[c]).collect();
        if let Some(map) = g.extend_hom(&gens, &images, g) {
            let mut hit = vec![false; n];
            if map.iter().all(|&y| !std::mem::replace(&mut hit[y], true)) {
                automorphisms.push(map);
            }
        }
        if !next_mixed(&mut choice, &radices) {
            break;
        }
    }
    automorphisms.sort();
    let aut = GroupTable::from_permutation_list(&automorphisms);

    let index: HashMap<&[usize], usize> = automorphisms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let ad: Vec<usize> = (0..n)
        .map(|x| {
            let perm: Vec<usize> = (0..n).map(|y| g.conj(x, y)).collect();
            index[perm.as_slice()]
        })
        .collect();
    let mut inn = ad.clone();
    inn.sort();
    inn.dedup();
    let out = aut.quotient(&inn);

    Ok(Structure { center: g.center(), aut, automorphisms, ad, inn, out })
}

fn next_mixed(tuple: &mut [usize], radices: &[usize]) -> bool {
    for (slot, &r) in tuple.iter_mut().zip(radices).rev() {
        *slot += 1;
        if *slot < r {
            return true;
        }
        *slot = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sizes(g: &GroupTable) -> (usize, usize, usize, usize) {
        let s = structure(g, &Caps::default()).unwrap();
        (s.center.len(), s.aut.order(), s.inn.len(), s.out.table.order())
    }

    #[test]
    fn z2() {
        assert_eq!(sizes(&GroupTable::cyclic(2)), (2, 1, 1, 1));
    }

    #[test]
    fn s3() {
        assert_eq!(sizes(&GroupTable::symmetric(3)), (1, 6, 6, 1));
    }

    #[test]
    fn z4() {
        assert_eq!(sizes(&GroupTable::cyclic(4)), (4, 2, 1, 2));
    }

    #[test]
    fn larger_groups() {
        let v4 = GroupTable::cyclic(2).product(&GroupTable::cyclic(2));
        assert_eq!(sizes(&v4), (4, 6, 1, 6));
        assert_eq!(sizes(&GroupTable::dihedral(4)), (2, 8, 4, 2));
        assert_eq!(sizes(&GroupTable::quaternion()), (2, 24, 4, 6));
        assert_eq!(sizes(&GroupTable::alternating4()), (1, 24, 12, 2));
    }

    #[test]
    fn inn_is_normal_in_aut() {
        for g in [GroupTable::symmetric(3), GroupTable::dihedral(4), GroupTable::quaternion()] {
            let s = structure(&g, &Caps::default()).unwrap();
            assert!(s.aut.is_normal(&s.inn));
            assert_eq!(s.automorphisms[0], (0..g.order()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn cap_exceeded() {
        let caps = Caps { aut_order: 4, ..Caps::default() };
        assert!(structure(&GroupTable::symmetric(3), &caps).unwrap_err().is_cap());
    }
}
