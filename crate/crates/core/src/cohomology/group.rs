use num_integer::Integer;

use crate::algebra::{dot, next_coord, smith_mod, GroupTable, ModMatrix};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::spaces::{n_tuples, Cochain, PModule};

use super::bar::{check_dims, coboundary, coboundary_entries};

/// `Hⁿ(P; A)` as `⊕ Z/tᵢ` with one representative cocycle per factor and
/// a solver expressing any cocycle in that basis.
#[derive(Clone, Debug)]
pub struct CohGroup {
    degree: usize,
    p: GroupTable,
    module: PModule,
    invariant_factors: Vec<u64>,
    representatives: Vec<Cochain>,
    // A cocycle x has lattice coordinates zᵢ = (V⁻¹x)ᵢ / cᵢ and class
    // coordinates (U z)ⱼ mod tⱼ.
    v_inv: ModMatrix,
    scale: Vec<u64>,
    class_rows: Vec<Vec<u64>>,
}

/// Outcome of a coboundary test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    /// `d(witness)` is the tested cocycle.
    Coboundary(Cochain),
    /// Class coordinates in the invariant factors (not all zero).
    Class(Vec<u64>),
}

fn lcm_of(factors: &[u64]) -> u64 {
    factors.iter().fold(1, |acc, &d| acc.lcm(&d))
}

/// `diag(m/eᵢ)·D` over `Z/m`: congruences modulo the row factors become
/// congruences modulo the common multiple `m`.
fn scaled(entries: &[Vec<i64>], row_factor: impl Fn(usize) -> u64, m: u64, cols: usize) -> ModMatrix {
    let rows: Vec<Vec<i64>> = entries
        .iter()
        .enumerate()
        .map(|(k, row)| {
            let s = (m / row_factor(k)) as i64;
            row.iter().map(|&x| x * s).collect()
        })
        .collect();
    ModMatrix::from_rows(m, &rows, cols)
}

pub fn cohomology_group(p: &GroupTable, a: &PModule, n: usize, caps: &Caps) -> Result<CohGroup> {
    check_dims(p, a, n, caps)?;
    let r = a.rank();
    let factor = |k: usize| a.factors()[k % r];
    let big_n = n_tuples(p.order(), n) * r;
    let m = lcm_of(a.factors());

    // Cocycles: (m/e)·Dₙx ≡ 0 mod m. With U D' V = S and x = V y this is
    // sᵢyᵢ ≡ 0, so yᵢ = cᵢzᵢ with cᵢ = m/sᵢ and zᵢ ∈ Z/sᵢ (sᵢ = m past
    // the rank).
    let dn = coboundary_entries(p, a, n);
    let (v, v_inv, scale, zmod) = if dn.is_empty() || big_n == 0 {
        (ModMatrix::identity(m, big_n), ModMatrix::identity(m, big_n), vec![1; big_n], vec![m; big_n])
    } else {
        let snf = smith_mod(scaled(&dn, factor, m, big_n), [false, false, true, true]);
        let zmod: Vec<u64> = (0..big_n).map(|i| if i < snf.rank { snf.diag[i] } else { m }).collect();
        let scale = zmod.iter().map(|&s| m / s).collect();
        (snf.v.expect("tracked"), snf.v_inv.expect("tracked"), scale, zmod)
    };
    let to_z = |x: &[u64]| -> Vec<u64> {
        v_inv.mul_vec(x).iter().zip(&scale).map(|(&y, &c)| {
            debug_assert_eq!(y % c, 0, "vector outside the cocycle lattice");
            y / c
        }).collect()
    };

    // Boundaries Dₙ₋₁ and the congruences eₖεₖ, in z coordinates, together
    // with the relations sᵢεᵢ of the z coordinates themselves.
    let mut gens: Vec<Vec<u64>> = Vec::new();
    if n > 0 && big_n > 0 {
        let prev = coboundary_entries(p, a, n - 1);
        let cols = prev.first().map_or(0, Vec::len);
        for j in 0..cols {
            let col: Vec<u64> = prev.iter().map(|row| row[j].rem_euclid(m as i64) as u64).collect();
            gens.push(to_z(&col));
        }
    }
    for k in 0..big_n {
        let mut col = vec![0; big_n];
        col[k] = factor(k) % m;
        gens.push(to_z(&col));
        if zmod[k] != m {
            let mut rel = vec![0; big_n];
            rel[k] = zmod[k];
            gens.push(rel);
        }
    }
    let mut g = ModMatrix::zeros(m, big_n, gens.len());
    for (j, col) in gens.iter().enumerate() {
        for (i, &x) in col.iter().enumerate() {
            g.set(i, j, x);
        }
    }
    let snf = smith_mod(g, [true, true, false, false]);
    let u = snf.u.expect("tracked");
    let u_inv = snf.u_inv.expect("tracked");

    let mut invariant_factors = Vec::new();
    let mut class_rows = Vec::new();
    let mut representatives = Vec::new();
    for i in 0..big_n {
        let t = if i < snf.rank { snf.diag[i] } else { m };
        if t == 1 {
            continue;
        }
        invariant_factors.push(t);
        class_rows.push(u.row(i).iter().map(|&x| x % t).collect());
        let y: Vec<u64> = (0..big_n).map(|k| ((u_inv.get(k, i) as u128 * scale[k] as u128) % m as u128) as u64).collect();
        let x = v.mul_vec(&y);
        let values = x.iter().enumerate().map(|(k, &v)| v % factor(k)).collect();
        representatives.push(Cochain::from_flat(p.order(), n, a.factors(), values));
    }
    Ok(CohGroup { degree: n, p: p.clone(), module: a.clone(), invariant_factors, representatives, v_inv, scale, class_rows })
}

impl CohGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    pub fn order(&self) -> u128 {
        self.invariant_factors.iter().map(|&t| t as u128).product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn representatives(&self) -> &[Cochain] {
        &self.representatives
    }

    pub fn module(&self) -> &PModule {
        &self.module
    }

    pub fn group(&self) -> &GroupTable {
        &self.p
    }

    fn check_shape(&self, x: &Cochain) -> Result<()> {
        if x.degree() != self.degree || x.p_order() != self.p.order() || x.factors() != self.module.factors() {
            return Err(Error::malformed("cochain does not match the cohomology group"));
        }
        Ok(())
    }

    /// Class coordinates of a cocycle.
    pub fn classify(&self, x: &Cochain) -> Result<Vec<u64>> {
        self.check_shape(x)?;
        let d = coboundary(&self.p, &self.module, x);
        if let Some((tuple, _)) = d.entries().into_iter().next() {
            return Err(Error::NotACocycle(tuple));
        }
        Ok(self.classify_unchecked(x))
    }

    pub(crate) fn classify_unchecked(&self, x: &Cochain) -> Vec<u64> {
        if self.invariant_factors.is_empty() {
            return Vec::new();
        }
        let m = self.v_inv.modulus();
        let z: Vec<u64> = self
            .v_inv
            .mul_vec(x.flat())
            .iter()
            .zip(&self.scale)
            .map(|(&y, &c)| y / c)
            .collect();
        self.class_rows
            .iter()
            .zip(&self.invariant_factors)
            .map(|(row, &t)| dot(row, &z, m) % t)
            .collect()
    }

    /// `Σ coordsᵢ · repᵢ`.
    pub fn element(&self, coords: &[u64]) -> Cochain {
        let mut x = Cochain::zero(self.p.order(), &self.module, self.degree);
        for (rep, &k) in self.representatives.iter().zip(coords) {
            x = x.add(&rep.scale(k));
        }
        x
    }

    /// All class coordinate vectors in odometer order (zero first).
    pub fn elements(&self) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        let mut c = vec![0; self.invariant_factors.len()];
        loop {
            out.push(c.clone());
            if !next_coord(&mut c, &self.invariant_factors) {
                break;
            }
        }
        out
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).zip(&self.invariant_factors).map(|((x, y), t)| (x + y) % t).collect()
    }

    pub fn neg(&self, a: &[u64]) -> Vec<u64> {
        a.iter().zip(&self.invariant_factors).map(|(x, t)| (t - x % t) % t).collect()
    }

    /// Either a cochain whose coboundary is `x`, or the class of `x`.
    pub fn is_coboundary(&self, x: &Cochain, caps: &Caps) -> Result<Membership> {
        let class = self.classify(x)?;
        if class.iter().any(|&c| c != 0) {
            return Ok(Membership::Class(class));
        }
        let w = coboundary_witness(&self.p, &self.module, x, caps)?.expect("class is zero");
        Ok(Membership::Coboundary(w))
    }
}

/// A cochain `w` with `dw = x`, if one exists. Degree-0 cochains are never
/// coboundaries unless zero.
pub fn coboundary_witness(p: &GroupTable, a: &PModule, x: &Cochain, caps: &Caps) -> Result<Option<Cochain>> {
    let n = x.degree();
    if n == 0 {
        return Ok(x.is_zero().then(|| x.clone()));
    }
    check_dims(p, a, n - 1, caps)?;
    let zero = Cochain::zero(p.order(), a, n - 1);
    if x.is_zero() {
        return Ok(Some(zero));
    }
    let r = a.rank();
    let factor = |k: usize| a.factors()[k % r];
    let cols = n_tuples(p.order(), n - 1) * r;
    if cols == 0 {
        return Ok(None);
    }
    let m = lcm_of(a.factors());
    // (m/e)·D w ≡ (m/e)·x mod m
    let d = scaled(&coboundary_entries(p, a, n - 1), factor, m, cols);
    let rhs: Vec<u64> = x.flat().iter().enumerate().map(|(k, &v)| v * (m / factor(k)) % m).collect();
    let snf = smith_mod(d, [true, false, true, false]);
    let b = snf.u.expect("tracked").mul_vec(&rhs);
    let mut z = vec![0; cols];
    for (i, &bi) in b.iter().enumerate() {
        if i < snf.rank {
            let s = snf.diag[i];
            if bi % s != 0 {
                return Ok(None);
            }
            z[i] = bi / s;
        } else if bi != 0 {
            return Ok(None);
        }
    }
    let w = snf.v.expect("tracked").mul_vec(&z);
    let values = w.iter().enumerate().map(|(k, &v)| v % factor(k)).collect();
    let w = Cochain::from_flat(p.order(), n - 1, a.factors(), values);
    debug_assert_eq!(&coboundary(p, a, &w), x);
    Ok(Some(w))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(p: &GroupTable, a: &PModule, n: usize) -> Vec<u64> {
        cohomology_group(p, a, n, &Caps::default()).unwrap().invariant_factors().to_vec()
    }

    #[test]
    fn cyclic_groups() {
        let z2 = GroupTable::cyclic(2);
        let a2 = PModule::trivial(2, vec![2]).unwrap();
        assert_eq!(h(&z2, &a2, 0), vec![2]);
        assert_eq!(h(&z2, &a2, 1), vec![2]);
        assert_eq!(h(&z2, &a2, 2), vec![2]);
        assert_eq!(h(&z2, &a2, 3), vec![2]);
        let z3 = GroupTable::cyclic(3);
        let a = PModule::trivial(3, vec![2]).unwrap();
        assert_eq!(h(&z3, &a, 2), Vec::<u64>::new());
        let z4 = GroupTable::cyclic(4);
        let a6 = PModule::trivial(4, vec![6]).unwrap();
        assert_eq!(h(&z4, &a6, 2), vec![2]);
        assert_eq!(h(&z4, &a6, 1), vec![2]);
    }

    #[test]
    fn klein_and_s3() {
        let v = GroupTable::cyclic(2).product(&GroupTable::cyclic(2));
        let a = PModule::trivial(4, vec![2]).unwrap();
        assert_eq!(h(&v, &a, 1), vec![2, 2]);
        assert_eq!(h(&v, &a, 2), vec![2, 2, 2]);
        assert_eq!(h(&v, &a, 3), vec![2, 2, 2, 2]);
        let s3 = GroupTable::symmetric(3);
        let a6 = PModule::trivial(6, vec![6]).unwrap();
        assert_eq!(h(&s3, &a6, 1), vec![2]);
        assert_eq!(h(&s3, &a6, 2), vec![2]);
        assert_eq!(h(&s3, &a6, 3), vec![6]);
    }

    #[test]
    fn twisted_coefficients() {
        // Z/2 acting on Z/3 by inversion has no cohomology in positive degree
        let z2 = GroupTable::cyclic(2);
        let a = PModule::new(&z2, vec![3], &[vec![vec![1]], vec![vec![-1]]]).unwrap();
        for n in 0..4 {
            assert_eq!(h(&z2, &a, n), Vec::<u64>::new());
        }
        // on Z/4 every group is Z/2
        let a = PModule::new(&z2, vec![4], &[vec![vec![1]], vec![vec![-1]]]).unwrap();
        assert_eq!(h(&z2, &a, 0), vec![2]);
        assert_eq!(h(&z2, &a, 1), vec![2]);
        assert_eq!(h(&z2, &a, 2), vec![2]);
    }

    #[test]
    fn representatives_classify_to_basis() {
        let v = GroupTable::cyclic(2).product(&GroupTable::cyclic(2));
        let a = PModule::trivial(4, vec![2, 4]).unwrap();
        for n in 0..3 {
            let g = cohomology_group(&v, &a, n, &Caps::default()).unwrap();
            for (i, rep) in g.representatives().iter().enumerate() {
                let mut e = vec![0; g.invariant_factors().len()];
                e[i] = 1;
                assert_eq!(g.classify(rep).unwrap(), e);
            }
            for c in g.elements() {
                assert_eq!(g.classify(&g.element(&c)).unwrap(), c);
            }
        }
    }

    #[test]
    fn witness_round_trip() {
        let s3 = GroupTable::symmetric(3);
        let a = PModule::trivial(6, vec![4]).unwrap();
        let w = Cochain::from_entries(6, &a, 1, &[(vec![1], vec![1]), (vec![3], vec![3]), (vec![5], vec![2])]).unwrap();
        let x = coboundary(&s3, &a, &w);
        let g = cohomology_group(&s3, &a, 2, &Caps::default()).unwrap();
        match g.is_coboundary(&x, &Caps::default()).unwrap() {
            Membership::Coboundary(w2) => assert_eq!(coboundary(&s3, &a, &w2), x),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn nonzero_class_is_reported() {
        let z2 = GroupTable::cyclic(2);
        let a = PModule::trivial(2, vec![2]).unwrap();
        let x = Cochain::from_entries(2, &a, 2, &[(vec![1, 1], vec![1])]).unwrap();
        let g = cohomology_group(&z2, &a, 2, &Caps::default()).unwrap();
        assert_eq!(g.is_coboundary(&x, &Caps::default()).unwrap(), Membership::Class(vec![1]));
        let zero = Cochain::zero(2, &a, 2);
        assert!(matches!(g.is_coboundary(&zero, &Caps::default()).unwrap(), Membership::Coboundary(w) if w.is_zero()));
    }

    #[test]
    fn trivial_group_and_degree_zero() {
        let p = GroupTable::trivial();
        let a = PModule::trivial(1, vec![2, 3]).unwrap();
        assert_eq!(h(&p, &a, 0), vec![6]);
        assert_eq!(h(&p, &a, 1), Vec::<u64>::new());
        assert_eq!(h(&p, &a, 2), Vec::<u64>::new());
    }
}
