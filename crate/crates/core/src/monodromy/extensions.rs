use crate::algebra::{enumerate_homs, mixed_index, structure, AbelianDecomposition, GroupHom, GroupTable, SourceGroup, Structure};
use crate::caps::Caps;
use crate::cohomology::{coboundary_witness, cohomology_group, CohGroup};
use crate::error::{Error, Result};
use crate::spaces::{Cochain, PModule};

use super::pointed::PointedSet;

/// An extension `1 → G → E → P → 1` up to equivalence: its outer action
/// and a coordinate in the `H²(P; Z(G)_ω)`-torsor over it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtensionClass {
    /// `ω(p)` in the `Out(G)` table, per element of `P`.
    pub outer_action: Vec<usize>,
    pub h2_coordinate: Vec<u64>,
}

/// Everything attached to one unobstructed outer action.
#[derive(Clone, Debug)]
pub struct OuterAction {
    pub omega: GroupHom,
    /// `F(p)`: the minimal representative in `Aut(G)` of `ω(p)`.
    pub lift: Vec<usize>,
    /// `Z(G)` with the action induced by `F`.
    pub center: PModule,
    pub h2: CohGroup,
    /// A factor system over `F`, `λ(p,q)` at `p·|P| + q`, normalized and
    /// satisfying `λ(p,q) λ(pq,r) = F(p)(λ(q,r)) λ(p,qr)`.
    pub base: Vec<usize>,
}

/// Extensions of `P` by `G`, grouped by outer action.
#[derive(Clone, Debug)]
pub struct Extensions {
    pub p: GroupTable,
    pub g: GroupTable,
    pub structure: Structure,
    /// Elements of `Z(G)` in the coordinates of `decomposition`, listed in
    /// the order of `center_elements`.
    pub decomposition: AbelianDecomposition,
    pub center_elements: Vec<usize>,
    pub actions: Vec<OuterAction>,
    /// Outer actions whose obstruction in `H³(P; Z(G)_ω)` is nonzero.
    pub obstructed: Vec<GroupHom>,
    pub classes: PointedSet<ExtensionClass>,
}

pub fn extensions(p: &GroupTable, g: &GroupTable, caps: &Caps) -> Result<Extensions> {
    let s = structure(g, caps)?;
    let n = p.order();
    let (center_table, center_elements) = g.subgroup_table(&s.center);
    let dec = AbelianDecomposition::new(&center_table)?;
    let mut center_pos = vec![usize::MAX; g.order()];
    for (i, &z) in center_elements.iter().enumerate() {
        center_pos[z] = i;
    }
    let coords = |x: usize| -> Vec<u64> { dec.coords(center_pos[x]).to_vec() };

    let homs = enumerate_homs(&SourceGroup::Table(p.clone()), &s.out.table, caps)?;
    let mut actions = Vec::new();
    let mut obstructed = Vec::new();
    for omega in homs {
        let lift: Vec<usize> = omega.images.iter().map(|&o| s.out.transversal[o]).collect();
        let matrices: Vec<Vec<Vec<i64>>> = lift
            .iter()
            .map(|&f| {
                let cols: Vec<Vec<u64>> =
                    dec.generators.iter().map(|&z| coords(s.apply(f, center_elements[z]))).collect();
                (0..dec.factors.len())
                    .map(|i| cols.iter().map(|c| c[i] as i64).collect())
                    .collect()
            })
            .collect();
        let center = PModule::new(p, dec.factors.clone(), &matrices)?;

        let mut lambda = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let aut = s.aut.mul(s.aut.mul(lift[a], lift[b]), s.aut.inv(lift[p.mul(a, b)]));
                lambda[a * n + b] = s.inner_preimage(aut).expect("ω is a homomorphism into Out");
            }
        }
        let mut k = Cochain::zero(n, &center, 3);
        for a in 1..n {
            for b in 1..n {
                for c in 1..n {
                    let x = obstruction_at(p, g, &s, &lift, &lambda, a, b, c);
                    k.set(&[a, b, c], &coords(x));
                }
            }
        }
        let Some(w) = coboundary_witness(p, &center, &k, caps)? else {
            obstructed.push(omega);
            continue;
        };
        // λ·z has obstruction k + dz, so z = −w clears it
        for a in 1..n {
            for b in 1..n {
                let z = center_elements[dec.element(&center.neg(&w.value(&[a, b])))];
                lambda[a * n + b] = g.mul(lambda[a * n + b], z);
            }
        }
        let h2 = cohomology_group(p, &center, 2, caps)?;
        actions.push(OuterAction { omega, lift, center, h2, base: lambda });
    }

    let mut elements = Vec::new();
    for act in &actions {
        for mu in act.h2.elements() {
            elements.push(ExtensionClass { outer_action: act.omega.images.clone(), h2_coordinate: mu });
        }
    }
    Ok(Extensions {
        p: p.clone(),
        g: g.clone(),
        structure: s,
        decomposition: dec,
        center_elements,
        actions,
        obstructed,
        classes: PointedSet { elements, basepoint: 0 },
    })
}

/// `F(p)(λ(q,r)) · λ(p,qr) · (λ(p,q) λ(pq,r))⁻¹`.
#[allow(clippy::too_many_arguments)]
fn obstruction_at(p: &GroupTable, g: &GroupTable, s: &Structure, f: &[usize], lambda: &[usize], a: usize, b: usize, c: usize) -> usize {
    let n = p.order();
    let l = |x: usize, y: usize| lambda[x * n + y];
    let lhs = g.mul(s.apply(f[a], l(b, c)), l(a, p.mul(b, c)));
    let rhs = g.mul(l(a, b), l(p.mul(a, b), c));
    g.mul(lhs, g.inv(rhs))
}

impl Extensions {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    fn action_index(&self, omega: &[usize]) -> Option<usize> {
        self.actions.iter().position(|a| a.omega.images == omega)
    }

    /// Index of a class in [`Self::classes`].
    pub fn index_of(&self, class: &ExtensionClass) -> Option<usize> {
        self.classes.elements.binary_search(class).ok()
    }

    /// A factor system `(F, λ)` realizing class `i`.
    pub fn factor_system(&self, i: usize) -> (Vec<usize>, Vec<usize>) {
        let class = &self.classes.elements[i];
        let act = &self.actions[self.action_index(&class.outer_action).expect("listed")];
        let n = self.p.order();
        let rep = act.h2.element(&class.h2_coordinate);
        let mut lambda = act.base.clone();
        for a in 1..n {
            for b in 1..n {
                let z = self.center_elements[self.decomposition.element(&rep.value(&[a, b]))];
                lambda[a * n + b] = self.g.mul(lambda[a * n + b], z);
            }
        }
        (act.lift.clone(), lambda)
    }

    /// The class of a normalized factor system `(F, λ)` with
    /// `F(p)F(q) = ad(λ(p,q))F(pq)` and
    /// `λ(p,q) λ(pq,r) = F(p)(λ(q,r)) λ(p,qr)`.
    pub fn classify(&self, f: &[usize], lambda: &[usize]) -> Result<usize> {
        let s = &self.structure;
        let g = &self.g;
        let p = &self.p;
        let n = p.order();
        let omega: Vec<usize> = f.iter().map(|&a| s.out.projection[a]).collect();
        let act = &self.actions[self
            .action_index(&omega)
            .ok_or_else(|| Error::malformed("factor system over an obstructed outer action"))?];
        // θ(p) with ad(θ(p)) F(p) = lift(p)
        let theta: Vec<usize> = (0..n)
            .map(|x| {
                let aut = s.aut.mul(act.lift[x], s.aut.inv(f[x]));
                s.inner_preimage(aut).expect("same outer class")
            })
            .collect();
        let mut z = Cochain::zero(n, &act.center, 2);
        let mut center_pos = vec![usize::MAX; g.order()];
        for (i, &c) in self.center_elements.iter().enumerate() {
            center_pos[c] = i;
        }
        for a in 1..n {
            for b in 1..n {
                let moved = g.mul(
                    g.mul(g.mul(theta[a], s.apply(f[a], theta[b])), lambda[a * n + b]),
                    g.inv(theta[p.mul(a, b)]),
                );
                let diff = g.mul(g.inv(act.base[a * n + b]), moved);
                if center_pos[diff] == usize::MAX {
                    return Err(Error::malformed("λ is not compatible with F"));
                }
                z.set(&[a, b], self.decomposition.coords(center_pos[diff]));
            }
        }
        let mu = act.h2.classify(&z)?;
        let class = ExtensionClass { outer_action: omega, h2_coordinate: mu };
        Ok(self.index_of(&class).expect("listed"))
    }

    /// `β · (F, λ) = (βFβ⁻¹, β∘λ)` on class `i`.
    pub fn act(&self, beta: usize, i: usize) -> usize {
        let s = &self.structure;
        let (f, lambda) = self.factor_system(i);
        let beta_inv = s.aut.inv(beta);
        let f2: Vec<usize> = f.iter().map(|&a| s.aut.mul(s.aut.mul(beta, a), beta_inv)).collect();
        let l2: Vec<usize> = lambda.iter().map(|&x| s.apply(beta, x)).collect();
        self.classify(&f2, &l2).expect("Aut(G) preserves factor systems")
    }

    /// Orbits of `Out(G)` on the classes, as sorted lists of class indices
    /// ordered by their smallest member.
    pub fn out_orbits(&self) -> Vec<Vec<usize>> {
        let mut orbit_of = vec![usize::MAX; self.len()];
        let mut orbits = Vec::new();
        for i in 0..self.len() {
            if orbit_of[i] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> = (0..self.structure.aut.order()).map(|b| self.act(b, i)).collect();
            members.sort();
            members.dedup();
            for &m in &members {
                orbit_of[m] = orbits.len();
            }
            orbits.push(members);
        }
        orbits
    }

    /// The extension group on `G × P` for class `i`:
    /// `(g, p)(h, q) = (g · F(p)(h) · λ(p,q), pq)`, index `g·|P| + p`.
    pub fn group(&self, i: usize) -> GroupTable {
        let (f, lambda) = self.factor_system(i);
        let (g, p, s) = (&self.g, &self.p, &self.structure);
        let n = p.order();
        let order = g.order() * n;
        let mut mul = Vec::with_capacity(order * order);
        for x in 0..order {
            let (a, pa) = (x / n, x % n);
            for y in 0..order {
                let (b, pb) = (y / n, y % n);
                let e = g.mul(g.mul(a, s.apply(f[pa], b)), lambda[pa * n + pb]);
                mul.push(e * n + p.mul(pa, pb));
            }
        }
        GroupTable::from_mul_unchecked(order, mul)
    }

    /// `mixed_index` of a class inside its outer action's `H²`.
    pub fn h2_index(&self, i: usize) -> usize {
        let class = &self.classes.elements[i];
        let act = &self.actions[self.action_index(&class.outer_action).expect("listed")];
        mixed_index(&class.h2_coordinate, act.h2.invariant_factors())
    }
}
