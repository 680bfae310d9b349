use std::collections::HashMap;

use crate::algebra::{mixed_index, next_coord, GroupTable};
use crate::caps::{sat_pow, Caps};
use crate::descent::{transform, twist, validate_datum, MonoidalDatum, Target};
use crate::error::{Error, Result};
use crate::spaces::TwoType;
use crate::xmod::{gr_cat_from_two_type, SkeletalGrCat};

use super::extensions::{extensions, ExtensionClass, Extensions};
use super::pointed::{ExactSeqReport, PointedSet, SeqTerm};

/// Giraud's `H²(X; G → Aut(G))` with the sequence of pointed sets
/// `1 → Ext(π₁, G)/Out(G) → H²(X; G → Aut(G)) → Hom(π₂, Z(G))/Out(G)`.
///
/// The middle term is the set of normalized monoidal-functor data into the
/// adjoint crossed module (see [`crate::descent`]), modulo transformations
/// and the action of `Aut(G)`. Each class is represented by its smallest
/// datum.
#[derive(Clone, Debug)]
pub struct GiraudH2 {
    pub source: SkeletalGrCat,
    pub target: Target,
    pub extensions: Extensions,
    pub first: PointedSet<ExtensionClass>,
    pub middle: PointedSet<MonoidalDatum>,
    /// Generator images in `Z(G)` of a homomorphism `π₂ → Z(G)`.
    pub last: PointedSet<Vec<usize>>,
    /// Whether every member of each `Out(G)`-orbit of extensions lands in
    /// the same middle class.
    pub first_map_well_defined: bool,
    /// Number of valid data enumerated.
    pub data: usize,
    pub report: ExactSeqReport,
    class_of: HashMap<MonoidalDatum, usize>,
}

impl GiraudH2 {
    /// Middle class of a valid normalized datum.
    pub fn class_of(&self, d: &MonoidalDatum) -> Option<usize> {
        self.class_of.get(d).copied()
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

pub fn giraud_h2(t: &TwoType, g: &GroupTable, caps: &Caps) -> Result<GiraudH2> {
    let target = Target::adjoint(g, caps)?;
    let Target::Adjoint { structure: s, .. } = &target else { unreachable!() };
    let h = gr_cat_from_two_type(t);
    let p = &h.p;
    let n = p.order();
    let bound = sat_pow(s.aut.order() as u128, n - 1).saturating_mul(sat_pow(g.order() as u128, (n - 1) * (n - 1)));
    Caps::check("monoidal data into the adjoint crossed module", bound, caps.monoidal)?;

    let ext = extensions(p, g, caps)?;
    let center = &s.center;

    // Hom(π₂, Z(G)) as generator images
    let choices: Vec<Vec<usize>> = t
        .pi2
        .factors()
        .iter()
        .map(|&d| center.iter().copied().filter(|&z| g.pow(z, d as i64) == 0).collect())
        .collect();
    let homs = odometer(&choices);

    // Enumerate data: F over Aut-lifts of each ω, λ over λ₀·Z(G), f over homs.
    let omegas = crate::algebra::enumerate_homs(&crate::algebra::SourceGroup::Table(p.clone()), &s.out.table, caps)?;
    let mut data: Vec<MonoidalDatum> = Vec::new();
    for omega in &omegas {
        let lifts: Vec<Vec<usize>> = omega
            .images
            .iter()
            .enumerate()
            .map(|(x, &o)| if x == 0 { vec![0] } else { (0..s.aut.order()).filter(|&a| s.out.projection[a] == o).collect() })
            .collect();
        for f in odometer(&lifts) {
            let mut base = vec![0; n * n];
            for a in 0..n {
                for b in 0..n {
                    let aut = s.aut.mul(s.aut.mul(f[a], f[b]), s.aut.inv(f[p.mul(a, b)]));
                    base[a * n + b] = s.inner_preimage(aut).expect("ω is a homomorphism");
                }
            }
            let slots: Vec<Vec<usize>> = (0..n * n)
                .map(|i| if i < n || i % n == 0 { vec![0] } else { center.iter().map(|&z| g.mul(base[i], z)).collect() })
                .collect();
            for lambda in odometer(&slots) {
                for fm in &homs {
                    let d = MonoidalDatum { object_map: f.clone(), morphism_map: fm.clone(), lambda: lambda.clone() };
                    if validate_datum(&h, &target, &d).is_ok() {
                        data.push(d);
                    }
                }
            }
        }
    }
    data.sort();
    let index: HashMap<MonoidalDatum, usize> = data.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();

    // Orbits under transformations supported at one point and under
    // generators of Aut(G); both act as groups, so generators suffice.
    let g_gens = g.generating_set();
    let aut_gens = s.aut.generating_set();
    let mut uf = UnionFind((0..data.len()).collect());
    for (i, d) in data.iter().enumerate() {
        for x in 1..n {
            for &y in &g_gens {
                let mut theta = vec![0; n];
                theta[x] = y;
                let j = index[&transform(&h, &target, d, &theta)];
                uf.union(i, j);
            }
        }
        for &beta in &aut_gens {
            let j = index[&twist(&target, d, beta)];
            uf.union(i, j);
        }
    }
    // data are sorted, so the root (smallest index) is the smallest datum
    let mut class_of_root = HashMap::new();
    let mut middle = Vec::new();
    let mut class_of = HashMap::new();
    for i in 0..data.len() {
        let r = uf.find(i);
        let c = *class_of_root.entry(r).or_insert_with(|| {
            middle.push(data[r].clone());
            middle.len() - 1
        });
        class_of.insert(data[i].clone(), c);
    }
    let trivial = MonoidalDatum::trivial(&h);
    let middle = PointedSet { basepoint: class_of[&trivial], elements: middle };

    // first term: extensions modulo Out(G), mapped through f = 0
    let orbits = ext.out_orbits();
    let zero_f = vec![0; t.pi2.rank()];
    let mut first_map = Vec::new();
    let mut well_defined = true;
    for orbit in &orbits {
        let targets: Vec<usize> = orbit
            .iter()
            .map(|&i| {
                let (f, lambda) = ext.factor_system(i);
                let d = MonoidalDatum { object_map: f, morphism_map: zero_f.clone(), lambda };
                class_of.get(&d).copied().ok_or_else(|| Error::malformed("extension datum missing from enumeration"))
            })
            .collect::<Result<_>>()?;
        well_defined &= targets.iter().all(|&c| c == targets[0]);
        first_map.push(targets[0]);
    }
    let first = PointedSet {
        elements: orbits.iter().map(|o| ext.classes.elements[o[0]].clone()).collect(),
        basepoint: 0,
    };

    // last term: Hom(π₂, Z(G)) modulo Aut(G)
    let radices: Vec<u64> = choices.iter().map(|c| c.len() as u64).collect();
    let hom_index = |fm: &[usize]| {
        let coords: Vec<u64> = fm.iter().zip(&choices).map(|(x, c)| c.iter().position(|y| y == x).expect("listed") as u64).collect();
        mixed_index(&coords, &radices)
    };
    let mut orbit_of = vec![usize::MAX; homs.len()];
    let mut last = Vec::new();
    for (i, fm) in homs.iter().enumerate() {
        if orbit_of[i] != usize::MAX {
            continue;
        }
        for beta in 0..s.aut.order() {
            let moved: Vec<usize> = fm.iter().map(|&z| s.apply(beta, z)).collect();
            orbit_of[hom_index(&moved)] = last.len();
        }
        last.push(fm.clone());
    }
    let last = PointedSet { elements: last, basepoint: 0 };
    let last_map = middle.elements.iter().map(|d| orbit_of[hom_index(&d.morphism_map)]).collect();

    let report = ExactSeqReport::new(
        vec![
            SeqTerm::point("1"),
            SeqTerm::new("Ext(P, G)/Out(G)", first.len(), 0),
            SeqTerm::new("H2(X; G -> Aut G)", middle.len(), middle.basepoint),
            SeqTerm::new("Hom(pi2, Z(G))/Out(G)", last.len(), 0),
        ],
        vec![vec![0], first_map, last_map],
    );
    Ok(GiraudH2 {
        source: h,
        target,
        extensions: ext,
        first,
        middle,
        last,
        first_map_well_defined: well_defined,
        data: data.len(),
        report,
        class_of,
    })
}

/// Every choice of one entry per slot, last slot fastest.
fn odometer(slots: &[Vec<usize>]) -> Vec<Vec<usize>> {
    if slots.iter().any(Vec::is_empty) {
        return Vec::new();
    }
    let radices: Vec<u64> = slots.iter().map(|s| s.len() as u64).collect();
    let mut idx = vec![0u64; slots.len()];
    let mut out = Vec::new();
    loop {
        out.push(idx.iter().zip(slots).map(|(&i, s)| s[i as usize]).collect());
        if !next_coord(&mut idx, &radices) {
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monodromy::h2_constant_abelian;
    use crate::spaces::{Cochain, PModule};

    fn two_type(p: usize, factors: Vec<u64>, k: &[(Vec<usize>, Vec<i64>)]) -> TwoType {
        let pi2 = PModule::trivial(p, factors).unwrap();
        let k = Cochain::from_entries(p, &pi2, 3, k).unwrap();
        TwoType::new(GroupTable::cyclic(p), pi2, k).unwrap()
    }

    #[test]
    fn z2_by_z3() {
        let r = giraud_h2(&two_type(2, vec![], &[]), &GroupTable::cyclic(3), &Caps::default()).unwrap();
        assert_eq!((r.first.len(), r.middle.len(), r.last.len()), (2, 2, 1));
        assert!(r.report.is_exact() && r.first_map_well_defined);
    }

    #[test]
    fn s3_cases() {
        let caps = Caps::default();
        let s3 = GroupTable::symmetric(3);
        for t in [
            two_type(1, vec![], &[]),
            two_type(1, vec![2], &[]),
            two_type(2, vec![], &[]),
            two_type(2, vec![2], &[]),
            two_type(2, vec![2], &[(vec![1, 1, 1], vec![1])]),
        ] {
            let r = giraud_h2(&t, &s3, &caps).unwrap();
            assert_eq!(r.middle.len(), 1);
            assert!(r.report.is_exact());
        }
    }

    #[test]
    fn abelian_agrees_with_hopf() {
        let caps = Caps::default();
        let z2 = GroupTable::cyclic(2);
        for t in [
            two_type(2, vec![2], &[]),
            two_type(2, vec![2], &[(vec![1, 1, 1], vec![1])]),
            two_type(1, vec![2], &[]),
            two_type(3, vec![2], &[]),
        ] {
            let r = giraud_h2(&t, &z2, &caps).unwrap();
            let m = h2_constant_abelian(&t, &z2, &caps).unwrap();
            assert_eq!(r.middle.len(), m.order());
            assert!(r.report.is_exact());
        }
    }

    #[test]
    fn hurewicz_case() {
        let caps = Caps::default();
        let t = two_type(1, vec![4], &[]);
        let r = giraud_h2(&t, &GroupTable::cyclic(4), &caps).unwrap();
        // Hom(Z/4, Z/4) = 4 maps, Out(Z/4) identifies ±1
        assert_eq!(r.last.len(), 3);
        assert_eq!(r.middle.len(), r.last.len());
    }

    #[test]
    fn centerless_matches_out_classification() {
        let caps = Caps::default();
        let r = giraud_h2(&two_type(2, vec![], &[]), &GroupTable::alternating4(), &caps).unwrap();
        assert_eq!(r.middle.len(), 2);
        assert!(r.report.is_exact());
    }
}
