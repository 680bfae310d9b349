use crate::algebra::{next_coord, AbelianDecomposition, GroupTable};
use crate::error::{Error, Result};

type Matrix = Vec<Vec<u64>>;

/// A finite abelian group `⊕ Z/dᵢ` with a left action of a finite group `P`
/// by automorphisms. Element `p` acts by the integer matrix `action[p]`;
/// entry `(i, j)` is read modulo `dᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PModule {
    factors: Vec<u64>,
    action: Vec<Matrix>,
}

fn reduce_matrix(factors: &[u64], m: &[Vec<i64>]) -> Result<Matrix> {
    let r = factors.len();
    if m.len() != r || m.iter().any(|row| row.len() != r) {
        return Err(Error::malformed(format!("action matrix must be {r}x{r}")));
    }
    Ok(m.iter()
        .zip(factors)
        .map(|(row, &d)| row.iter().map(|&x| x.rem_euclid(d as i64) as u64).collect())
        .collect())
}

fn check_factors(factors: &[u64]) -> Result<()> {
    match factors.iter().find(|&&d| d < 2) {
        Some(d) => Err(Error::malformed(format!("cyclic factor {d} must be at least 2"))),
        None => Ok(()),
    }
}

impl PModule {
    pub fn trivial(p_order: usize, factors: Vec<u64>) -> Result<Self> {
        check_factors(&factors)?;
        let id = identity(factors.len());
        Ok(PModule { action: vec![id; p_order], factors })
    }

    /// Action given on every element of `p`.
    pub fn new(p: &GroupTable, factors: Vec<u64>, matrices: &[Vec<Vec<i64>>]) -> Result<Self> {
        check_factors(&factors)?;
        if matrices.len() != p.order() {
            return Err(Error::malformed(format!(
                "expected {} action matrices, got {}",
                p.order(),
                matrices.len()
            )));
        }
        let action = matrices
            .iter()
            .map(|m| reduce_matrix(&factors, m))
            .collect::<Result<Vec<_>>>()?;
        let module = PModule { factors, action };
        module.check(p)?;
        Ok(module)
    }

    /// Action given on generators `gens` of `p` and extended along the
    /// Cayley graph; inconsistent data is rejected.
    pub fn from_generators(
        p: &GroupTable,
        gens: &[usize],
        factors: Vec<u64>,
        matrices: &[Vec<Vec<i64>>],
    ) -> Result<Self> {
        check_factors(&factors)?;
        if matrices.len() != gens.len() {
            return Err(Error::malformed("one action matrix per generator expected"));
        }
        let gen_mats = matrices
            .iter()
            .map(|m| reduce_matrix(&factors, m))
            .collect::<Result<Vec<_>>>()?;
        let mut action: Vec<Option<Matrix>> = vec![None; p.order()];
        action[0] = Some(identity(factors.len()));
        let mut queue = std::collections::VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for (&g, mg) in gens.iter().zip(&gen_mats) {
                let y = p.mul(x, g);
                let m = compose(&factors, action[x].as_ref().expect("visited"), mg);
                match &action[y] {
                    None => {
                        action[y] = Some(m);
                        queue.push_back(y);
                    }
                    Some(old) if *old != m => {
                        return Err(Error::ActionNotHomomorphic(format!(
                            "generator matrices disagree on element {y}"
                        )))
                    }
                    Some(_) => {}
                }
            }
        }
        let action = action
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::malformed("generators do not generate the group"))?;
        let module = PModule { factors, action };
        module.check(p)?;
        Ok(module)
    }

    /// `G` with the trivial action, through its cyclic decomposition.
    pub fn from_abelian(p_order: usize, g: &GroupTable) -> Result<(Self, AbelianDecomposition)> {
        let dec = AbelianDecomposition::new(g)?;
        Ok((Self::trivial(p_order, dec.factors.clone())?, dec))
    }

    fn check(&self, p: &GroupTable) -> Result<()> {
        let r = self.rank();
        for (x, m) in self.action.iter().enumerate() {
            for i in 0..r {
                for j in 0..r {
                    if !(m[i][j] as u128 * self.factors[j] as u128).is_multiple_of(self.factors[i] as u128) {
                        return Err(Error::ActionNotHomomorphic(format!(
                            "matrix of {x} is not well defined at ({i}, {j})"
                        )));
                    }
                }
            }
        }
        if self.action[0] != identity(r) {
            return Err(Error::ActionNotHomomorphic("identity does not act trivially".into()));
        }
        for a in 0..p.order() {
            for b in 0..p.order() {
                if compose(&self.factors, &self.action[a], &self.action[b]) != self.action[p.mul(a, b)] {
                    return Err(Error::ActionNotHomomorphic(format!(
                        "action of {a}·{b} differs from the composite"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u128 {
        self.factors.iter().map(|&d| d as u128).product()
    }

    pub fn p_order(&self) -> usize {
        self.action.len()
    }

    pub fn matrix(&self, p: usize) -> &[Vec<u64>] {
        &self.action[p]
    }

    pub fn is_trivial_action(&self) -> bool {
        let id = identity(self.rank());
        self.action.iter().all(|m| *m == id)
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.rank()]
    }

    pub fn act(&self, p: usize, a: &[u64]) -> Vec<u64> {
        apply(&self.factors, &self.action[p], a)
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).zip(&self.factors).map(|((x, y), d)| (x + y) % d).collect()
    }

    pub fn neg(&self, a: &[u64]) -> Vec<u64> {
        a.iter().zip(&self.factors).map(|(x, d)| (d - x % d) % d).collect()
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        self.add(a, &self.neg(b))
    }

    pub fn reduce(&self, a: &[i64]) -> Vec<u64> {
        a.iter().zip(&self.factors).map(|(&x, &d)| x.rem_euclid(d as i64) as u64).collect()
    }

    /// All elements in odometer order (zero first).
    pub fn elements(&self) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        let mut c = self.zero();
        loop {
            out.push(c.clone());
            if !next_coord(&mut c, &self.factors) {
                break;
            }
        }
        out
    }

    /// Checks that every matrix is a bijection of the underlying set.
    pub fn check_invertible(&self) -> Result<()> {
        let elements = self.elements();
        for (p, m) in self.action.iter().enumerate() {
            let mut images: Vec<Vec<u64>> = elements.iter().map(|a| apply(&self.factors, m, a)).collect();
            images.sort();
            images.dedup();
            if images.len() != elements.len() {
                return Err(Error::ActionNotHomomorphic(format!("matrix of {p} is not invertible")));
            }
        }
        Ok(())
    }
}

fn identity(r: usize) -> Matrix {
    (0..r).map(|i| (0..r).map(|j| u64::from(i == j)).collect()).collect()
}

fn apply(factors: &[u64], m: &[Vec<u64>], a: &[u64]) -> Vec<u64> {
    m.iter()
        .zip(factors)
        .map(|(row, &d)| {
            let s: u128 = row.iter().zip(a).map(|(&x, &y)| x as u128 * y as u128).sum();
            (s % d as u128) as u64
        })
        .collect()
}

fn compose(factors: &[u64], a: &[Vec<u64>], b: &[Vec<u64>]) -> Matrix {
    let r = factors.len();
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let s: u128 = (0..r).map(|k| a[i][k] as u128 * b[k][j] as u128).sum();
                    (s % factors[i] as u128) as u64
                })
                .collect()
        })
        .collect()
}

/// A homomorphism of finite abelian groups `⊕ Z/dⱼ → ⊕ Z/eᵢ` given by an
/// integer matrix (target rank × source rank).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleHom {
    matrix: Vec<Vec<u64>>,
}

impl ModuleHom {
    pub fn new(source: &PModule, target: &PModule, matrix: &[Vec<i64>]) -> Result<Self> {
        if matrix.len() != target.rank() || matrix.iter().any(|r| r.len() != source.rank()) {
            return Err(Error::malformed(format!(
                "module map must be {}x{}",
                target.rank(),
                source.rank()
            )));
        }
        let m = matrix
            .iter()
            .zip(target.factors())
            .map(|(row, &d)| row.iter().map(|&x| x.rem_euclid(d as i64) as u64).collect())
            .collect();
        let hom = ModuleHom { matrix: m };
        hom.check_well_defined(source, target)?;
        Ok(hom)
    }

    /// Images of the source generators, one column each.
    pub fn from_generator_images(target: &PModule, images: &[Vec<u64>]) -> Self {
        let matrix = (0..target.rank())
            .map(|i| images.iter().map(|col| col[i]).collect())
            .collect();
        ModuleHom { matrix }
    }

    pub fn zero(source: &PModule, target: &PModule) -> Self {
        ModuleHom { matrix: vec![vec![0; source.rank()]; target.rank()] }
    }

    pub fn identity(module: &PModule) -> Self {
        ModuleHom { matrix: identity(module.rank()) }
    }

    pub fn matrix(&self) -> &[Vec<u64>] {
        &self.matrix
    }

    pub fn generator_image(&self, j: usize) -> Vec<u64> {
        self.matrix.iter().map(|row| row[j]).collect()
    }

    fn check_well_defined(&self, source: &PModule, target: &PModule) -> Result<()> {
        for (i, row) in self.matrix.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if !(x as u128 * source.factors()[j] as u128).is_multiple_of(target.factors()[i] as u128) {
                    return Err(Error::malformed(format!(
                        "module map is not well defined at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn apply(&self, target: &PModule, a: &[u64]) -> Vec<u64> {
        apply(target.factors(), &self.matrix, a)
    }

    pub fn add(&self, other: &ModuleHom, target: &PModule) -> ModuleHom {
        let matrix = self
            .matrix
            .iter()
            .zip(&other.matrix)
            .zip(target.factors())
            .map(|((r1, r2), &d)| r1.iter().zip(r2).map(|(a, b)| (a + b) % d).collect())
            .collect();
        ModuleHom { matrix }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(|&x| x == 0)
    }

    /// `f(p·a) = p·f(a)` on generators `a` of the source.
    pub fn check_equivariant(&self, source: &PModule, target: &PModule) -> Result<()> {
        for p in 0..source.p_order() {
            for j in 0..source.rank() {
                let mut e = source.zero();
                e[j] = 1;
                let lhs = self.apply(target, &source.act(p, &e));
                let rhs = target.act(p, &self.apply(target, &e));
                if lhs != rhs {
                    return Err(Error::NotEquivariant { p, generator: j });
                }
            }
        }
        Ok(())
    }

    /// Every homomorphism `source → target` of abelian groups, ignoring the
    /// action, in odometer order of generator images (zero first).
    pub fn enumerate(source: &PModule, target: &PModule) -> Vec<ModuleHom> {
        let targets = target.elements();
        let choices: Vec<Vec<Vec<u64>>> = source
            .factors()
            .iter()
            .map(|&d| {
                targets
                    .iter()
                    .filter(|x| x.iter().zip(target.factors()).all(|(&c, &e)| (c as u128 * d as u128).is_multiple_of(e as u128)))
                    .cloned()
                    .collect()
            })
            .collect();
        let radices: Vec<u64> = choices.iter().map(|c| c.len() as u64).collect();
        let mut out = Vec::new();
        let mut idx = vec![0u64; radices.len()];
        loop {
            let images: Vec<Vec<u64>> =
                idx.iter().zip(&choices).map(|(&i, c)| c[i as usize].clone()).collect();
            out.push(ModuleHom::from_generator_images(target, &images));
            if !next_coord(&mut idx, &radices) {
                break;
            }
        }
        out
    }

    /// Equivariant homomorphisms only.
    pub fn enumerate_equivariant(source: &PModule, target: &PModule) -> Vec<ModuleHom> {
        Self::enumerate(source, target)
            .into_iter()
            .filter(|f| f.check_equivariant(source, target).is_ok())
            .collect()
    }
}
