use crate::caps::{sat_pow, Caps};
use crate::error::{Error, Result};

use super::group::GroupTable;

/// A finitely presented group. Relator letters are nonzero and 1-based:
/// `k` stands for generator `k - 1` and `-k` for its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    n_generators: usize,
    relators: Vec<Vec<i32>>,
}

impl Presentation {
    pub fn new(n_generators: usize, relators: Vec<Vec<i32>>) -> Result<Self> {
        for (i, word) in relators.iter().enumerate() {
            if let Some(&l) = word
                .iter()
                .find(|&&l| l == 0 || l.unsigned_abs() as usize > n_generators)
            {
                return Err(Error::malformed(format!(
                    "relator {i} has letter {l} outside ±1..={n_generators}"
                )));
            }
        }
        Ok(Presentation { n_generators, relators })
    }

    pub fn free(n_generators: usize) -> Self {
        Presentation { n_generators, relators: Vec::new() }
    }

    pub fn cyclic(n: usize) -> Self {
        Presentation { n_generators: 1, relators: vec![vec![1; n]] }
    }

    pub fn n_generators(&self) -> usize {
        self.n_generators
    }

    pub fn relators(&self) -> &[Vec<i32>] {
        &self.relators
    }

    /// Tietze-simplified copy: generators occurring exactly once in some
    /// relator are eliminated (shortest relator first), words are freely and
    /// cyclically reduced, trivial relators dropped, and mostly-inverse
    /// relators inverted. The group is unchanged
    /// up to isomorphism but generators are renumbered.
    pub fn simplify(&self) -> Presentation {
        let mut n = self.n_generators;
        let mut rels: Vec<Vec<i32>> = self.relators.iter().map(|w| cyclic_reduce(free_reduce(w))).collect();
        rels.retain(|w| !w.is_empty());
        loop {
            let mut best: Option<(usize, usize)> = None;
            for (ri, w) in rels.iter().enumerate() {
                if best.is_some_and(|(b, _)| rels[b].len() <= w.len()) {
                    continue;
                }
                if let Some(pos) = (0..w.len()).find(|&i| w.iter().filter(|l| l.abs() == w[i].abs()).count() == 1) {
                    best = Some((ri, pos));
                }
            }
            let Some((ri, pos)) = best else { break };
            let r = rels.swap_remove(ri);
            let x = r[pos];
            let (u, v) = (&r[..pos], &r[pos + 1..]);
            // x^ε = u⁻¹ v⁻¹
            let mut value: Vec<i32> = inverse(u).into_iter().chain(inverse(v)).collect();
            if x < 0 {
                value = inverse(&value);
            }
            let g = x.abs();
            let renumber = |l: i32| if l.abs() > g { l - l.signum() } else { l };
            let value: Vec<i32> = value.into_iter().map(renumber).collect();
            rels = rels
                .iter()
                .map(|w| {
                    let mut out = Vec::with_capacity(w.len());
                    for &l in w {
                        if l == g {
                            out.extend_from_slice(&value);
                        } else if l == -g {
                            out.extend(inverse(&value));
                        } else {
                            out.push(renumber(l));
                        }
                    }
                    cyclic_reduce(free_reduce(&out))
                })
                .filter(|w| !w.is_empty())
                .collect();
            n -= 1;
        }
        for w in &mut rels {
            if w.iter().filter(|&&l| l < 0).count() * 2 > w.len() {
                *w = inverse(w);
            }
        }
        rels.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        rels.dedup();
        Presentation { n_generators: n, relators: rels }
    }

    /// Value of `word` when generator `i` is sent to `images[i]`.
    pub fn eval_word(word: &[i32], images: &[usize], target: &GroupTable) -> usize {
        word.iter().fold(0, |acc, &l| {
            let g = images[l.unsigned_abs() as usize - 1];
            target.mul(acc, if l > 0 { g } else { target.inv(g) })
        })
    }

    pub fn satisfies_relators(&self, images: &[usize], target: &GroupTable) -> bool {
        self.relators
            .iter()
            .all(|w| Self::eval_word(w, images, target) == 0)
    }

    /// Abelianization as `(free rank, torsion invariant factors > 1)`.
    pub fn abelianization(&self) -> (usize, Vec<num_bigint::BigInt>) {
        let mut m = super::snf::IntMatrix::zeros(self.relators.len(), self.n_generators);
        for (r, word) in self.relators.iter().enumerate() {
            for &l in word {
                let c = l.unsigned_abs() as usize - 1;
                let delta = if l > 0 { 1 } else { -1 };
                m.add_to(r, c, delta);
            }
        }
        let diag = super::snf::invariant_factors(&m);
        let rank = diag.len();
        let one = num_bigint::BigInt::from(1);
        let torsion = diag.into_iter().filter(|d| *d != one).collect();
        (self.n_generators - rank, torsion)
    }
}

/// A group given either concretely or by a presentation; the source of
/// homomorphism enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SourceGroup {
    Table(GroupTable),
    Presentation(Presentation),
}

/// A homomorphism out of a [`SourceGroup`]. For a presentation the images
/// are per generator; for a table they are per element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupHom {
    pub images: Vec<usize>,
}

impl GroupHom {
    /// `ad(g) ∘ self`.
    pub fn conjugate(&self, g: usize, target: &GroupTable) -> GroupHom {
        GroupHom { images: self.images.iter().map(|&x| target.conj(g, x)).collect() }
    }

    pub fn is_trivial(&self) -> bool {
        self.images.iter().all(|&x| x == 0)
    }
}

impl SourceGroup {
    /// The trivial homomorphism to any group.
    pub fn trivial_hom(&self) -> GroupHom {
        match self {
            SourceGroup::Table(t) => GroupHom { images: vec![0; t.order()] },
            SourceGroup::Presentation(p) => GroupHom { images: vec![0; p.n_generators()] },
        }
    }

    /// Checks that `hom` respects the defining data of the source.
    pub fn is_hom(&self, hom: &GroupHom, target: &GroupTable) -> bool {
        match self {
            SourceGroup::Table(t) => t.is_hom_to(target, &hom.images),
            SourceGroup::Presentation(p) => {
                hom.images.len() == p.n_generators() && p.satisfies_relators(&hom.images, target)
            }
        }
    }
}

/// All homomorphisms `source → target`, sorted lexicographically by their
/// image vectors (so the trivial homomorphism is first).
pub fn enumerate_homs(source: &SourceGroup, target: &GroupTable, caps: &Caps) -> Result<Vec<GroupHom>> {
    let (n_gens, table_gens) = match source {
        SourceGroup::Table(t) => {
            let gens = t.generating_set();
            (gens.len(), Some(gens))
        }
        SourceGroup::Presentation(p) => (p.n_generators(), None),
    };
    let needed = sat_pow(target.order() as u128, n_gens);
    Caps::check("homomorphism candidates", needed, caps.hom_tuples)?;

    let mut out = Vec::new();
    let mut tuple = vec![0usize; n_gens];
    loop {
        match (source, &table_gens) {
            (SourceGroup::Table(t), Some(gens)) => {
                if let Some(map) = t.extend_hom(gens, &tuple, target) {
                    out.push(GroupHom { images: map });
                }
            }
            (SourceGroup::Presentation(p), _) => {
                if p.satisfies_relators(&tuple, target) {
                    out.push(GroupHom { images: tuple.clone() });
                }
            }
            _ => unreachable!(),
        }
        if !next_tuple(&mut tuple, target.order()) {
            break;
        }
    }
    out.sort();
    Ok(out)
}

/// Odometer increment over `0..base` in each slot, last slot fastest.
/// Returns `false` after the last tuple.
pub(crate) fn next_tuple(tuple: &mut [usize], base: usize) -> bool {
    for slot in tuple.iter_mut().rev() {
        *slot += 1;
        if *slot < base {
            return true;
        }
        *slot = 0;
    }
    false
}

fn inverse(w: &[i32]) -> Vec<i32> {
    w.iter().rev().map(|&l| -l).collect()
}

fn free_reduce(w: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn cyclic_reduce(mut w: Vec<i32>) -> Vec<i32> {
    let mut start = 0;
    while w.len() - start >= 2 && w[start] == -w[w.len() - 1] {
        start += 1;
        w.pop();
    }
    w.drain(..start);
    w
}
