use num_traits::ToPrimitive;

use crate::error::{Error, Result};

use super::group::GroupTable;
use super::snf::{smith_partial, IntMatrix};

/// An isomorphism between an abelian group table and `⊕ Z/dᵢ` with
/// `d₁ | d₂ | …`, all `dᵢ ≥ 2`.
#[derive(Clone, Debug)]
pub struct AbelianDecomposition {
    pub factors: Vec<u64>,
    /// Element of the table generating each cyclic factor.
    pub generators: Vec<usize>,
    coords: Vec<Vec<u64>>,
    elements: Vec<usize>,
}

impl AbelianDecomposition {
    pub fn new(g: &GroupTable) -> Result<Self> {
        if let Some((a, b)) = g.non_commuting_pair() {
            return Err(Error::NonAbelianTarget(a, b));
        }
        let gens = g.generating_set();
        let k = gens.len();

        // Relation lattice from the filtration ⟨g₁⟩ ⊂ ⟨g₁,g₂⟩ ⊂ …: row i says
        // cᵢ·gᵢ equals a word in the earlier generators.
        let mut rel = IntMatrix::zeros(k, k);
        let mut known: Vec<Option<Vec<i64>>> = vec![None; g.order()];
        known[0] = Some(vec![0; k]);
        for (i, &s) in gens.iter().enumerate() {
            let mut c = 1;
            let mut x = s;
            while known[x].is_none() {
                x = g.mul(x, s);
                c += 1;
            }
            let lower = known[x].clone().expect("found in earlier subgroup");
            for (j, &v) in lower.iter().enumerate() {
                rel.add_to(i, j, -v);
            }
            rel.add_to(i, i, c);
            // extend coordinates to ⟨g₁..gᵢ⟩
            let inside: Vec<usize> = (0..g.order()).filter(|&y| known[y].is_some()).collect();
            for m in 1..c {
                let sm = g.pow(s, m);
                for &y in &inside {
                    let z = g.mul(y, sm);
                    if known[z].is_none() {
                        let mut v = known[y].clone().expect("inside");
                        v[i] += m;
                        known[z] = Some(v);
                    }
                }
            }
        }

        // Rows of `rel` span the relations; x ↦ x·V diagonalizes them.
        let snf = smith_partial(rel);
        let v_inv = snf.v_inv;
        let mut factors = Vec::new();
        let mut generators = Vec::new();
        for j in 0..k {
            let d = snf.s.get(j, j).to_u64().expect("small factor");
            if d == 1 {
                continue;
            }
            // new generator j is row j of V⁻¹ in old coordinates
            let elt = (0..k).fold(0, |acc, i| {
                let e = v_inv.get(j, i).to_i64().expect("small entry");
                g.mul(acc, g.pow(gens[i], e))
            });
            factors.push(d);
            generators.push(elt);
        }

        let total: u64 = factors.iter().product();
        debug_assert_eq!(total as usize, g.order());
        let mut coords = vec![Vec::new(); g.order()];
        let mut elements = Vec::with_capacity(g.order());
        let mut c = vec![0u64; factors.len()];
        loop {
            let elt = c
                .iter()
                .zip(&generators)
                .fold(0, |acc, (&e, &gen)| g.mul(acc, g.pow(gen, e as i64)));
            coords[elt] = c.clone();
            elements.push(elt);
            if !next_coord(&mut c, &factors) {
                break;
            }
        }
        Ok(AbelianDecomposition { factors, generators, coords, elements })
    }

    pub fn coords(&self, element: usize) -> &[u64] {
        &self.coords[element]
    }

    pub fn element(&self, coords: &[u64]) -> usize {
        self.elements[mixed_index(coords, &self.factors)]
    }
}

/// Row-major index of a coordinate vector in `Π [0, dᵢ)`.
pub fn mixed_index(coords: &[u64], factors: &[u64]) -> usize {
    coords
        .iter()
        .zip(factors)
        .fold(0usize, |acc, (&c, &d)| acc * d as usize + (c % d) as usize)
}

/// Odometer over `Π [0, dᵢ)`, last coordinate fastest.
pub fn next_coord(c: &mut [u64], factors: &[u64]) -> bool {
    for (slot, &d) in c.iter_mut().zip(factors).rev() {
        *slot += 1;
        if *slot < d {
            return true;
        }
        *slot = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decompositions() {
        let cases = [
            (GroupTable::trivial(), vec![]),
            (GroupTable::cyclic(6), vec![6]),
            (GroupTable::cyclic(2).product(&GroupTable::cyclic(3)), vec![6]),
            (GroupTable::cyclic(2).product(&GroupTable::cyclic(2)), vec![2, 2]),
            (GroupTable::cyclic(4).product(&GroupTable::cyclic(2)), vec![2, 4]),
        ];
        for (g, factors) in cases {
            let d = AbelianDecomposition::new(&g).unwrap();
            assert_eq!(d.factors, factors);
            for x in 0..g.order() {
                assert_eq!(d.element(d.coords(x)), x);
            }
            // coordinates add
            for x in 0..g.order() {
                for y in 0..g.order() {
                    let sum: Vec<u64> = d
                        .coords(x)
                        .iter()
                        .zip(d.coords(y))
                        .zip(&d.factors)
                        .map(|((a, b), m)| (a + b) % m)
                        .collect();
                    assert_eq!(d.element(&sum), g.mul(x, y));
                }
            }
        }
    }

    #[test]
    fn rejects_non_abelian() {
        assert!(matches!(
            AbelianDecomposition::new(&GroupTable::symmetric(3)),
            Err(Error::NonAbelianTarget(..))
        ));
    }
}
