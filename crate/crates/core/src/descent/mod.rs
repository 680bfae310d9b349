//! Monoidal-functor data out of a skeletal gr-category, the discrete form
//! of a descent datum: validation of the coherence conditions and search
//! for isomorphisms between data.
//!
//! A datum `(F, f, λ)` into the adjoint crossed module `G → Aut(G)` has an
//! object map `F: P → Aut(G)`, a homomorphism `f: A → Z(G)` and a
//! structure function `λ: P × P → G`, all normalized, subject to
//!
//! ```text
//! F(p)F(q) = ad(λ(p,q)) F(pq)
//! f(p·a)   = F(p)(f(a))
//! λ(p,q) λ(pq,r) = f(assoc(p,q,r)) · F(p)(λ(q,r)) · λ(p,qr)
//! ```
//!
//! For the target `G[1]` with `G` abelian, `F` is trivial and the last line
//! is the 2-cocycle condition twisted by the associator.
//!
//! A transformation `θ: P → G` (with `θ(e) = e`) sends a datum to
//! `F'(p) = ad(θ(p)) F(p)`,
//! `λ'(p,q) = θ(p) · F(p)(θ(q)) · λ(p,q) · θ(pq)⁻¹` and leaves `f` fixed.

use crate::algebra::{structure, GroupTable, Structure};
use crate::caps::{sat_pow, Caps};
use crate::error::{Error, Result};
use crate::xmod::SkeletalGrCat;

/// The coefficient gr-category of a monoidal functor.
#[derive(Clone, Debug)]
pub enum Target {
    /// `G[1]` for abelian `G`.
    Abelian(GroupTable),
    /// The adjoint crossed module `G → Aut(G)`.
    Adjoint { g: GroupTable, structure: Structure },
}

impl Target {
    pub fn abelian(g: &GroupTable) -> Result<Self> {
        if let Some((a, b)) = g.non_commuting_pair() {
            return Err(Error::NonAbelianTarget(a, b));
        }
        Ok(Target::Abelian(g.clone()))
    }

    pub fn adjoint(g: &GroupTable, caps: &Caps) -> Result<Self> {
        Ok(Target::Adjoint { g: g.clone(), structure: structure(g, caps)? })
    }

    pub fn group(&self) -> &GroupTable {
        match self {
            Target::Abelian(g) | Target::Adjoint { g, .. } => g,
        }
    }

    /// Number of automorphisms available to the object map.
    pub fn n_objects(&self) -> usize {
        match self {
            Target::Abelian(_) => 1,
            Target::Adjoint { structure, .. } => structure.aut.order(),
        }
    }

    fn apply(&self, aut: usize, x: usize) -> usize {
        match self {
            Target::Abelian(_) => x,
            Target::Adjoint { structure, .. } => structure.apply(aut, x),
        }
    }

    fn compose(&self, a: usize, b: usize) -> usize {
        match self {
            Target::Abelian(_) => 0,
            Target::Adjoint { structure, .. } => structure.aut.mul(a, b),
        }
    }

    fn ad(&self, g: usize) -> usize {
        match self {
            Target::Abelian(_) => 0,
            Target::Adjoint { structure, .. } => structure.ad[g],
        }
    }

    fn is_central(&self, x: usize) -> bool {
        let g = self.group();
        (0..g.order()).all(|y| g.mul(x, y) == g.mul(y, x))
    }
}

/// Normalized monoidal-functor data. Elements of `P` and `G` are table
/// indices; automorphisms are indices into `Aut(G)` of the target.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonoidalDatum {
    /// `F(p)`; all zero for a `G[1]` target.
    pub object_map: Vec<usize>,
    /// Image in `G` of each cyclic generator of `A`.
    pub morphism_map: Vec<usize>,
    /// `λ(p, q)` at index `p·|P| + q`.
    pub lambda: Vec<usize>,
}

/// The first condition a datum fails, with the elements witnessing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Shape(String),
    /// `F(e)`, `λ(e, q)` or `λ(p, e)` is not the identity.
    Normalization { p: usize, q: usize },
    /// `f` on this generator is not central or has the wrong order.
    MorphismMap { generator: usize },
    NotEquivariant { p: usize, generator: usize },
    /// `F(p)F(q) ≠ ad(λ(p,q)) F(pq)`.
    ObjectMap { p: usize, q: usize },
    Coherence { p: usize, q: usize, r: usize },
}

impl MonoidalDatum {
    /// The datum with `F = id`, `f = 0`, `λ = e`.
    pub fn trivial(h: &SkeletalGrCat) -> Self {
        let n = h.p.order();
        MonoidalDatum { object_map: vec![0; n], morphism_map: vec![0; h.a.rank()], lambda: vec![0; n * n] }
    }

    pub fn lambda(&self, n: usize, p: usize, q: usize) -> usize {
        self.lambda[p * n + q]
    }
}

/// `f(a)` for `a` in the cyclic coordinates of `A`.
pub fn eval_morphism(g: &GroupTable, images: &[usize], a: &[u64]) -> usize {
    images.iter().zip(a).fold(0, |acc, (&x, &k)| g.mul(acc, g.pow(x, k as i64)))
}

pub fn validate_datum(h: &SkeletalGrCat, target: &Target, d: &MonoidalDatum) -> std::result::Result<(), Violation> {
    let p = &h.p;
    let n = p.order();
    let g = target.group();
    if d.object_map.len() != n || d.lambda.len() != n * n || d.morphism_map.len() != h.a.rank() {
        return Err(Violation::Shape("datum does not match the source".into()));
    }
    if d.object_map.iter().any(|&a| a >= target.n_objects()) || d.lambda.iter().chain(&d.morphism_map).any(|&x| x >= g.order()) {
        return Err(Violation::Shape("datum entry out of range".into()));
    }
    if d.object_map[0] != 0 {
        return Err(Violation::Normalization { p: 0, q: 0 });
    }
    for x in 0..n {
        if d.lambda(n, 0, x) != 0 {
            return Err(Violation::Normalization { p: 0, q: x });
        }
        if d.lambda(n, x, 0) != 0 {
            return Err(Violation::Normalization { p: x, q: 0 });
        }
    }
    for (j, (&x, &order)) in d.morphism_map.iter().zip(h.a.factors()).enumerate() {
        if !target.is_central(x) || g.pow(x, order as i64) != 0 {
            return Err(Violation::MorphismMap { generator: j });
        }
    }
    let f = |a: &[u64]| eval_morphism(g, &d.morphism_map, a);
    for pe in 0..n {
        for j in 0..h.a.rank() {
            let mut e = h.a.zero();
            e[j] = 1;
            if f(&h.a.act(pe, &e)) != target.apply(d.object_map[pe], d.morphism_map[j]) {
                return Err(Violation::NotEquivariant { p: pe, generator: j });
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let lhs = target.compose(d.object_map[a], d.object_map[b]);
            let rhs = target.compose(target.ad(d.lambda(n, a, b)), d.object_map[p.mul(a, b)]);
            if lhs != rhs {
                return Err(Violation::ObjectMap { p: a, q: b });
            }
        }
    }
    for a in 1..n {
        for b in 1..n {
            for c in 1..n {
                let ab = p.mul(a, b);
                let bc = p.mul(b, c);
                let lhs = g.mul(d.lambda(n, a, b), d.lambda(n, ab, c));
                let twisted = target.apply(d.object_map[a], d.lambda(n, b, c));
                let rhs = g.mul(g.mul(f(&h.assoc.value(&[a, b, c])), twisted), d.lambda(n, a, bc));
                if lhs != rhs {
                    return Err(Violation::Coherence { p: a, q: b, r: c });
                }
            }
        }
    }
    Ok(())
}

/// The datum obtained from `d` through the transformation `θ`.
pub fn transform(h: &SkeletalGrCat, target: &Target, d: &MonoidalDatum, theta: &[usize]) -> MonoidalDatum {
    let p = &h.p;
    let n = p.order();
    let g = target.group();
    let object_map = (0..n).map(|x| target.compose(target.ad(theta[x]), d.object_map[x])).collect();
    let mut lambda = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            let t = g.mul(theta[a], target.apply(d.object_map[a], theta[b]));
            lambda[a * n + b] = g.mul(g.mul(t, d.lambda(n, a, b)), g.inv(theta[p.mul(a, b)]));
        }
    }
    MonoidalDatum { object_map, morphism_map: d.morphism_map.clone(), lambda }
}

/// `β · (F, f, λ) = (βFβ⁻¹, β∘f, β∘λ)` for `β ∈ Aut(G)`.
pub fn twist(target: &Target, d: &MonoidalDatum, beta: usize) -> MonoidalDatum {
    match target {
        Target::Abelian(_) => d.clone(),
        Target::Adjoint { structure: s, .. } => {
            let beta_inv = s.aut.inv(beta);
            MonoidalDatum {
                object_map: d.object_map.iter().map(|&a| s.aut.mul(s.aut.mul(beta, a), beta_inv)).collect(),
                morphism_map: d.morphism_map.iter().map(|&x| s.apply(beta, x)).collect(),
                lambda: d.lambda.iter().map(|&x| s.apply(beta, x)).collect(),
            }
        }
    }
}

/// A transformation `θ` taking `d1` to `d2`, if one exists. The search is
/// exhaustive over normalized `θ`, restricted per element by the object
/// maps.
pub fn isomorphic(
    h: &SkeletalGrCat,
    target: &Target,
    d1: &MonoidalDatum,
    d2: &MonoidalDatum,
    caps: &Caps,
) -> Result<Option<Vec<usize>>> {
    if d1.morphism_map != d2.morphism_map {
        return Ok(None);
    }
    let n = h.p.order();
    let g = target.group();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            if x == 0 {
                return vec![0];
            }
            (0..g.order())
                .filter(|&t| target.compose(target.ad(t), d1.object_map[x]) == d2.object_map[x])
                .collect()
        })
        .collect();
    let total = candidates.iter().fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128));
    Caps::check("transformations searched", total, caps.monoidal)?;
    if candidates.iter().any(Vec::is_empty) {
        return Ok(None);
    }
    let radices: Vec<u64> = candidates.iter().map(|c| c.len() as u64).collect();
    let mut idx = vec![0u64; n];
    loop {
        let theta: Vec<usize> = idx.iter().zip(&candidates).map(|(&i, c)| c[i as usize]).collect();
        if transform(h, target, d1, &theta) == *d2 {
            return Ok(Some(theta));
        }
        if !crate::algebra::next_coord(&mut idx, &radices) {
            return Ok(None);
        }
    }
}

/// An automorphism `β` and transformation `θ` taking `β · d1` to `d2`.
pub fn isomorphic_twisted(
    h: &SkeletalGrCat,
    target: &Target,
    d1: &MonoidalDatum,
    d2: &MonoidalDatum,
    caps: &Caps,
) -> Result<Option<(usize, Vec<usize>)>> {
    for beta in 0..target.n_objects() {
        if let Some(theta) = isomorphic(h, target, &twist(target, d1, beta), d2, caps)? {
            return Ok(Some((beta, theta)));
        }
    }
    Ok(None)
}

/// Upper bound on normalized `λ` tables, used for enumeration caps.
pub fn lambda_count(h: &SkeletalGrCat, target: &Target) -> u128 {
    let n = h.p.order();
    sat_pow(target.group().order() as u128, (n.saturating_sub(1)).pow(2))
}
