use crate::algebra::{mixed_index, AbelianDecomposition, GroupTable};
use crate::caps::Caps;
use crate::cohomology::{coboundary_witness, cohomology_group, delta_obstruction, pushforward_class, CohGroup};
use crate::descent::MonoidalDatum;
use crate::error::{Error, Result};
use crate::spaces::{Cochain, ModuleHom, PModule, TwoType};
use crate::xmod::{gr_cat_from_two_type, SkeletalGrCat};

use super::pointed::{ExactSeqReport, SeqTerm};

/// `π₀ Hom⊗(H, G[1])` for abelian `G`.
///
/// A class is a pair `(f, μ)`: an equivariant `f: A → G` with `δ(f) = 0`
/// and `μ ∈ H²(P; G)`. The class stands for the datum `λ_f + rep(μ)`,
/// where `λ_f` is a fixed solution of `dλ = −f∘assoc`. Element `(u, μ)`
/// has index `u·|H²| + mixed_index(μ)`, `u` indexing [`Self::unobstructed`].
#[derive(Clone, Debug)]
pub struct MonoidalPi0 {
    pub source: SkeletalGrCat,
    pub target: GroupTable,
    pub decomposition: AbelianDecomposition,
    /// `G` as a trivial `P`-module.
    pub coefficients: PModule,
    pub h2: CohGroup,
    pub h3: CohGroup,
    /// All of `Hom_P(A, G)`.
    pub homs: Vec<ModuleHom>,
    /// `δ(f)` in the coordinates of `h3`, per hom.
    pub delta: Vec<Vec<u64>>,
    /// Indices into `homs` of the `f` with `δ(f) = 0`.
    pub unobstructed: Vec<usize>,
    lambdas: Vec<Cochain>,
    pub report: ExactSeqReport,
}

impl MonoidalPi0 {
    pub fn order(&self) -> usize {
        self.unobstructed.len() * self.h2.order() as usize
    }

    fn h2_len(&self) -> usize {
        self.h2.order() as usize
    }

    /// `(index into homs, μ)`.
    pub fn split(&self, x: usize) -> (usize, Vec<u64>) {
        let n = self.h2_len();
        let mut mu = vec![0; self.h2.invariant_factors().len()];
        let mut rest = x % n;
        for (slot, &t) in mu.iter_mut().zip(self.h2.invariant_factors()).rev() {
            *slot = rest as u64 % t;
            rest /= t as usize;
        }
        (self.unobstructed[x / n], mu)
    }

    /// The structure cochain `λ` of the datum for class `x`.
    pub fn lambda(&self, x: usize) -> Cochain {
        let n = self.h2_len();
        let (_, mu) = self.split(x);
        self.lambdas[x / n].add(&self.h2.element(&mu))
    }

    /// Class of a datum `(f, λ)`. `λ` must satisfy `dλ = −f∘assoc`.
    pub fn classify(&self, hom: usize, lambda: &Cochain) -> Result<usize> {
        let u = self
            .unobstructed
            .iter()
            .position(|&h| h == hom)
            .ok_or_else(|| Error::malformed("morphism map is obstructed"))?;
        let mu = self.h2.classify(&lambda.sub(&self.lambdas[u]))?;
        Ok(u * self.h2_len() + mixed_index(&mu, self.h2.invariant_factors()))
    }

    fn hom_index(&self, f: &ModuleHom) -> usize {
        self.homs.iter().position(|h| h == f).expect("sum of equivariant maps")
    }

    /// The group law: pointwise sum of data.
    pub fn mul(&self, x: usize, y: usize) -> usize {
        let (f, _) = self.split(x);
        let (g, _) = self.split(y);
        let sum = self.homs[f].add(&self.homs[g], &self.coefficients);
        self.classify(self.hom_index(&sum), &self.lambda(x).add(&self.lambda(y)))
            .expect("sum of data is a datum")
    }

    pub fn table(&self, caps: &Caps) -> Result<GroupTable> {
        let n = self.order();
        Caps::check("monoidal classes tabulated", n as u128, caps.table_order as u128)?;
        let mul = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).map(|(x, y)| self.mul(x, y)).collect();
        Ok(GroupTable::from_mul_unchecked(n, mul))
    }

    pub fn invariant_factors(&self, caps: &Caps) -> Result<Vec<u64>> {
        Ok(AbelianDecomposition::new(&self.table(caps)?)?.factors)
    }

    /// Class `x` as element-valued data for [`crate::descent`].
    pub fn datum(&self, x: usize) -> MonoidalDatum {
        let (f, _) = self.split(x);
        let n = self.source.p.order();
        let lambda = self.lambda(x);
        let mut table = vec![0; n * n];
        for p in 1..n {
            for q in 1..n {
                table[p * n + q] = self.decomposition.element(&lambda.value(&[p, q]));
            }
        }
        MonoidalDatum {
            object_map: vec![0; n],
            morphism_map: (0..self.source.a.rank())
                .map(|j| self.decomposition.element(&self.homs[f].generator_image(j)))
                .collect(),
            lambda: table,
        }
    }
}

/// `π₀ Hom⊗(H, G[1])` with the sequence
/// `1 → H²(P;G) → π₀ → Hom_P(A,G) → H³(P;G)`, exactness checked at the
/// three interior terms.
pub fn pi0_monoidal_to_g1(h: &SkeletalGrCat, g: &GroupTable, caps: &Caps) -> Result<MonoidalPi0> {
    let (coefficients, decomposition) = PModule::from_abelian(h.p.order(), g)?;
    let h2 = cohomology_group(&h.p, &coefficients, 2, caps)?;
    let h3 = cohomology_group(&h.p, &coefficients, 3, caps)?;
    Caps::check("H3 elements in sequence", h3.order(), caps.cochains)?;
    Caps::check("homomorphisms A → G", sat_order(g.order(), h.a.rank()), caps.hom_tuples)?;
    let homs = ModuleHom::enumerate_equivariant(&h.a, &coefficients);
    let delta = homs
        .iter()
        .map(|f| delta_obstruction(f, h, &h3))
        .collect::<Result<Vec<_>>>()?;
    let unobstructed: Vec<usize> = (0..homs.len()).filter(|&i| delta[i].iter().all(|&c| c == 0)).collect();
    let mut lambdas = Vec::with_capacity(unobstructed.len());
    for &i in &unobstructed {
        let twisted = pushforward_class(&homs[i], &h.a, &coefficients, &h.assoc)?.neg();
        lambdas.push(coboundary_witness(&h.p, &coefficients, &twisted, caps)?.expect("δ(f) = 0"));
    }
    let mut out = MonoidalPi0 {
        source: h.clone(),
        target: g.clone(),
        decomposition,
        coefficients,
        h2,
        h3,
        homs,
        delta,
        unobstructed,
        lambdas,
        report: ExactSeqReport::new(vec![SeqTerm::point("1")], vec![]),
    };
    out.report = sequence(&out, "pi0 Hom(H, G[1])")?;
    Ok(out)
}

fn sat_order(base: usize, exp: usize) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base as u128))
}

fn sequence(m: &MonoidalPi0, middle: &str) -> Result<ExactSeqReport> {
    let h2_elems = m.h2.elements();
    let zero_hom = m.hom_index(&ModuleHom::zero(&m.source.a, &m.coefficients));
    let inclusion = h2_elems
        .iter()
        .map(|mu| m.classify(zero_hom, &m.h2.element(mu)))
        .collect::<Result<Vec<_>>>()?;
    let projection = (0..m.order()).map(|x| m.split(x).0).collect();
    let delta = m.delta.iter().map(|c| mixed_index(c, m.h3.invariant_factors())).collect();
    Ok(ExactSeqReport::new(
        vec![
            SeqTerm::point("1"),
            SeqTerm::new("H2(P; G)", h2_elems.len(), 0),
            SeqTerm::new(middle, m.order(), 0),
            SeqTerm::new("Hom_P(A, G)", m.homs.len(), zero_hom),
            SeqTerm::new("H3(P; G)", m.h3.order() as usize, 0),
        ],
        vec![vec![0], inclusion, projection, delta],
    ))
}

/// `H²(X; G)` for a 2-type `X` and abelian `G`, with the Hopf sequence
/// `1 → H²(π₁;G) → H²(X;G) → Hom_{π₁}(π₂,G) → H³(π₁;G)`.
pub fn h2_constant_abelian(t: &TwoType, g: &GroupTable, caps: &Caps) -> Result<MonoidalPi0> {
    let mut m = pi0_monoidal_to_g1(&gr_cat_from_two_type(t), g, caps)?;
    m.report = sequence(&m, "H2(X; G)")?;
    Ok(m)
}

/// The splitting of the Hopf sequence when `k = dc`: `f ↦ (f, −f∘c)`.
#[derive(Clone, Debug)]
pub struct SplitSection {
    /// `c` with `dc = k`.
    pub trivialization: Cochain,
    /// Class of the section's value, per element of `homs`.
    pub section: Vec<usize>,
    /// `projection ∘ section = id`.
    pub is_section: bool,
    /// The section is a homomorphism.
    pub is_hom: bool,
    /// `(μ, f) ↦ ι(μ)·s(f)` is a bijection `H² × Hom → H²(X; G)`.
    pub is_product: bool,
}

pub fn split_check(t: &TwoType, g: &GroupTable, caps: &Caps) -> Result<(MonoidalPi0, SplitSection)> {
    let c = coboundary_witness(&t.pi1, &t.pi2, &t.k, caps)?.ok_or(Error::KNotTrivial)?;
    let m = h2_constant_abelian(t, g, caps)?;
    let section = (0..m.homs.len())
        .map(|i| {
            let lambda = pushforward_class(&m.homs[i], &t.pi2, &m.coefficients, &c)?.neg();
            m.classify(i, &lambda)
        })
        .collect::<Result<Vec<_>>>()?;
    let is_section = section.iter().enumerate().all(|(i, &x)| m.split(x).0 == i);
    let is_hom = (0..m.homs.len()).all(|i| {
        (0..m.homs.len()).all(|j| {
            let sum = m.hom_index(&m.homs[i].add(&m.homs[j], &m.coefficients));
            m.mul(section[i], section[j]) == section[sum]
        })
    });
    let inclusion = &m.report.maps[1];
    let mut hit = vec![false; m.order()];
    for &i in inclusion {
        for &s in &section {
            hit[m.mul(i, s)] = true;
        }
    }
    let is_product = inclusion.len() * section.len() == m.order() && hit.iter().all(|&b| b);
    Ok((m, SplitSection { trivialization: c, section, is_section, is_hom, is_product }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descent::{validate_datum, Target};

    fn two_type(p: usize, factors: Vec<u64>, k: &[(Vec<usize>, Vec<i64>)]) -> TwoType {
        let pi1 = GroupTable::cyclic(p);
        let pi2 = PModule::trivial(p, factors).unwrap();
        let k = Cochain::from_entries(p, &pi2, 3, k).unwrap();
        TwoType::new(pi1, pi2, k).unwrap()
    }

    #[test]
    fn orders() {
        let caps = Caps::default();
        let z2 = GroupTable::cyclic(2);
        let cases = [
            (two_type(1, vec![2], &[]), 2),
            (two_type(2, vec![], &[]), 2),
            (two_type(2, vec![2], &[]), 4),
            (two_type(2, vec![2], &[(vec![1, 1, 1], vec![1])]), 2),
        ];
        for (t, order) in cases {
            let m = h2_constant_abelian(&t, &z2, &caps).unwrap();
            assert_eq!(m.order(), order);
            assert!(m.report.is_exact());
        }
    }

    #[test]
    fn data_are_valid_and_distinct_classes() {
        let caps = Caps::default();
        let t = two_type(2, vec![4], &[(vec![1, 1, 1], vec![2])]);
        let z4 = GroupTable::cyclic(4);
        let m = h2_constant_abelian(&t, &z4, &caps).unwrap();
        let target = Target::abelian(&z4).unwrap();
        for x in 0..m.order() {
            assert_eq!(validate_datum(&m.source, &target, &m.datum(x)), Ok(()));
        }
        assert!(m.report.is_exact());
        let table = m.table(&caps).unwrap();
        assert!(table.is_abelian());
    }

    #[test]
    fn nonabelian_target_rejected() {
        let t = two_type(2, vec![], &[]);
        assert!(matches!(
            h2_constant_abelian(&t, &GroupTable::symmetric(3), &Caps::default()),
            Err(Error::NonAbelianTarget(..))
        ));
    }

    #[test]
    fn split_section() {
        let caps = Caps::default();
        let t = two_type(2, vec![2], &[]);
        let (m, s) = split_check(&t, &GroupTable::cyclic(2), &caps).unwrap();
        assert!(s.is_section && s.is_hom && s.is_product);
        assert_eq!(m.order(), 4);
        let obstructed = two_type(2, vec![2], &[(vec![1, 1, 1], vec![1])]);
        assert!(matches!(split_check(&obstructed, &GroupTable::cyclic(2), &caps), Err(Error::KNotTrivial)));
    }

    #[test]
    fn group_law_is_a_group() {
        let caps = Caps::default();
        let z2 = GroupTable::cyclic(2);
        let pi2 = PModule::trivial(2, vec![4]).unwrap();
        let k = Cochain::from_entries(2, &pi2, 3, &[(vec![1, 1, 1], vec![2])]).unwrap();
        let t = TwoType::new(z2, pi2, k).unwrap();
        let m = h2_constant_abelian(&t, &GroupTable::cyclic(4), &caps).unwrap();
        assert_eq!(m.order(), 4);
        assert!(m.report.is_exact());
        let table = GroupTable::validate(m.table(&caps).unwrap().rows()).unwrap();
        assert!(table.is_abelian());
        let inclusion = &m.report.maps[1];
        for (a, &x) in inclusion.iter().enumerate() {
            for (b, &y) in inclusion.iter().enumerate() {
                assert_eq!(m.mul(x, y), inclusion[(a + b) % 2]);
            }
        }
    }
}
