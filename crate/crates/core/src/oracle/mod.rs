//! Naive enumerators used as ground truth for the formula pipelines. They
//! share nothing with those pipelines beyond the validated domain types:
//! no Smith normal forms, no cohomology groups, no factor-system theory.

use std::collections::{BTreeSet, HashSet};

use crate::algebra::GroupTable;
use crate::caps::{sat_pow, Caps};
use crate::descent::{isomorphic, validate_datum, MonoidalDatum, Target};
use crate::error::{Error, Result};
use crate::spaces::PModule;
use crate::xmod::SkeletalGrCat;

/// Sizes found by [`brute_cocycles`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruteCohomology {
    pub cocycles: u128,
    pub coboundaries: u128,
    pub classes: u128,
}

/// Elements of `A` with addition, negation and the action as lookup tables.
struct ElementTables {
    size: usize,
    add: Vec<usize>,
    neg: Vec<usize>,
    act: Vec<Vec<usize>>,
}

impl ElementTables {
    fn new(a: &PModule) -> Self {
        let elements = a.elements();
        let position = |v: &[u64]| elements.iter().position(|e| e == v).expect("closed");
        let size = elements.len();
        let add = elements
            .iter()
            .flat_map(|x| elements.iter().map(|y| position(&a.add(x, y))).collect::<Vec<_>>())
            .collect();
        let neg = elements.iter().map(|x| position(&a.neg(x))).collect();
        let act = (0..a.p_order())
            .map(|p| elements.iter().map(|x| position(&a.act(p, x))).collect())
            .collect();
        ElementTables { size, add, neg, act }
    }

    fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.size + y]
    }
}

/// One coboundary equation: `g₁·c(t₀) + Σ ± c(tᵢ) = 0` over the tuple
/// indices it involves (`None` for a tuple containing the identity).
struct Equation {
    first: Option<usize>,
    g1: usize,
    terms: Vec<(Option<usize>, bool)>,
}

/// Tuples of non-identity elements, lexicographic.
fn tuples(p_order: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                (1..p_order).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

/// Counts normalized `n`-cocycles by backtracking over cochain values in
/// tuple order, checking each equation once all its tuples are assigned.
fn count_cocycles(p: &GroupTable, a: &ElementTables, n: usize, budget: &mut u128, cap: u128) -> Result<u128> {
    let k = p.order();
    let cochain_tuples = tuples(k, n);
    let lookup = |t: &[usize]| -> Option<usize> {
        if t.contains(&0) {
            return None;
        }
        Some(t.iter().fold(0, |acc, &x| acc * (k - 1) + x - 1))
    };
    let mut equations: Vec<Vec<Equation>> = (0..cochain_tuples.len()).map(|_| Vec::new()).collect();
    for t in tuples(k, n + 1) {
        let first = lookup(&t[1..]);
        let mut terms = Vec::new();
        for i in 0..n {
            let mut s = t[..i].to_vec();
            s.push(p.mul(t[i], t[i + 1]));
            s.extend_from_slice(&t[i + 2..]);
            terms.push((lookup(&s), i % 2 == 0));
        }
        terms.push((lookup(&t[..n]), n.is_multiple_of(2)));
        let last = std::iter::once(first).chain(terms.iter().map(|&(i, _)| i)).flatten().max();
        if let Some(last) = last {
            equations[last].push(Equation { first, g1: t[0], terms });
        }
    }
    // sign convention: term i (0-based) of the alternating sum carries
    // (−1)^{i+1}, the leading g₁·c term carries +1
    let mut values = vec![0usize; cochain_tuples.len()];
    fn holds(a: &ElementTables, values: &[usize], e: &Equation) -> bool {
        let get = |i: Option<usize>| i.map_or(0, |i| values[i]);
        let mut acc = a.act[e.g1][get(e.first)];
        for &(i, negative) in &e.terms {
            let v = get(i);
            acc = a.add(acc, if negative { a.neg[v] } else { v });
        }
        acc == 0
    }
    fn search(
        pos: usize,
        a: &ElementTables,
        values: &mut Vec<usize>,
        equations: &[Vec<Equation>],
        budget: &mut u128,
        cap: u128,
    ) -> Result<u128> {
        if pos == values.len() {
            return Ok(1);
        }
        let mut count = 0;
        for v in 0..a.size {
            *budget += 1;
            if *budget > cap {
                return Err(Error::CapExceeded { what: "backtracking nodes", needed: *budget, cap });
            }
            values[pos] = v;
            if equations[pos].iter().all(|e| holds(a, values, e)) {
                count += search(pos + 1, a, values, equations, budget, cap)?;
            }
        }
        Ok(count)
    }
    if cochain_tuples.is_empty() {
        return Ok(1);
    }
    search(0, a, &mut values, &equations, budget, cap)
}

/// Cocycles, coboundaries and classes of normalized `n`-cochains, `n ≥ 1`.
/// The coboundary count is `|Cⁿ⁻¹| / |Zⁿ⁻¹|`, with `Z⁰` the invariants.
/// The search is bounded by `caps.cochains` nodes in total.
pub fn brute_cocycles(p: &GroupTable, a: &PModule, n: usize, caps: &Caps) -> Result<BruteCohomology> {
    if n == 0 {
        return Err(Error::malformed("degree must be at least 1"));
    }
    let t = ElementTables::new(a);
    let mut budget = 0;
    let cocycles = count_cocycles(p, &t, n, &mut budget, caps.cochains)?;
    let (lower_cochains, lower_cocycles) = if n == 1 {
        let invariant = (0..t.size).filter(|&x| (0..p.order()).all(|g| t.act[g][x] == x)).count();
        (t.size as u128, invariant as u128)
    } else {
        let count = sat_pow(t.size as u128, (p.order() - 1).pow(n as u32 - 1));
        (count, count_cocycles(p, &t, n - 1, &mut budget, caps.cochains)?)
    };
    let coboundaries = lower_cochains / lower_cocycles;
    Ok(BruteCohomology { cocycles, coboundaries, classes: cocycles / coboundaries })
}

/// Classes of monoidal functors `H → G[1]`: every generator image for `f`
/// and every normalized `λ` is tried, valid data are kept and grouped by
/// exhaustive isomorphism search.
pub fn brute_monoidal(h: &SkeletalGrCat, g: &GroupTable, caps: &Caps) -> Result<Vec<MonoidalDatum>> {
    let target = Target::abelian(g)?;
    let n = h.p.order();
    let slots = h.a.rank() + (n - 1) * (n - 1);
    let m = g.order();
    Caps::check("monoidal data", sat_pow(m as u128, slots), caps.monoidal)?;
    let mut reps: Vec<MonoidalDatum> = Vec::new();
    let mut code = vec![0usize; slots];
    loop {
        let (f, l) = code.split_at(h.a.rank());
        let mut lambda = vec![0; n * n];
        for (i, &x) in l.iter().enumerate() {
            lambda[(i / (n - 1) + 1) * n + i % (n - 1) + 1] = x;
        }
        let d = MonoidalDatum { object_map: vec![0; n], morphism_map: f.to_vec(), lambda };
        if validate_datum(h, &target, &d).is_ok() {
            let mut new = true;
            for r in &reps {
                if isomorphic(h, &target, r, &d, caps)?.is_some() {
                    new = false;
                    break;
                }
            }
            if new {
                reps.push(d);
            }
        }
        let mut i = slots;
        loop {
            if i == 0 {
                return Ok(reps);
            }
            i -= 1;
            code[i] += 1;
            if code[i] < m {
                break;
            }
            code[i] = 0;
        }
    }
}

/// Automorphisms of `G` found by testing every permutation fixing `0`.
fn automorphisms_by_permutation(g: &GroupTable) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    fn rec(k: usize, perm: &mut Vec<usize>, g: &GroupTable, out: &mut Vec<Vec<usize>>) {
        let n = perm.len();
        if k == n {
            if g.is_hom_to(g, perm) {
                out.push(perm.clone());
            }
            return;
        }
        for i in k..n {
            perm.swap(k, i);
            rec(k + 1, perm, g, out);
            perm.swap(k, i);
        }
    }
    rec(1, &mut perm, g, &mut out);
    out
}

/// Extensions `1 → G → E → P → 1` up to equivalence, by enumerating group
/// laws on the set `G × P` that restrict to `G` on `G × {e}`, project to
/// `P` and have `p ↦ (e, p)` as a normalized section:
/// `(g, p)(h, q) = (g · φ_p(h) · λ(p,q), pq)` with `φ_p` a bijection of `G`
/// fixing `e`. Laws are built entry by entry, associativity on the section
/// is checked as soon as it is determined, and complete tables are checked
/// in full. Equivalence classes are orbits under `(g, p) ↦ (g·t(p), p)`.
pub fn brute_extensions(p: &GroupTable, g: &GroupTable, caps: &Caps) -> Result<usize> {
    let (np, ng) = (p.order(), g.order());
    Caps::check("extension table order", (np * ng) as u128, 12)?;
    let auts = automorphisms_by_permutation(g);
    let order = np * ng;
    let mut tables: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut budget: u128 = 0;

    let mut phi = vec![0usize; np];
    loop {
        let mut lambda = vec![0usize; np * np];
        let pairs: Vec<(usize, usize)> = (1..np).flat_map(|a| (1..np).map(move |b| (a, b))).collect();
        search_lambda(p, g, &auts, &phi, &pairs, 0, &mut lambda, &mut tables, &mut budget, caps)?;
        // next φ with φ_e = identity (automorphism 0 is the identity)
        let mut i = np;
        loop {
            if i <= 1 {
                return Ok(count_orbits(p, g, order, &tables));
            }
            i -= 1;
            phi[i] += 1;
            if phi[i] < auts.len() {
                break;
            }
            phi[i] = 0;
        }
    }
}

fn section_product(p: &GroupTable, g: &GroupTable, auts: &[Vec<usize>], phi: &[usize], lambda: &[usize], x: (usize, usize), y: (usize, usize)) -> (usize, usize) {
    let np = p.order();
    (g.mul(g.mul(x.0, auts[phi[x.1]][y.0]), lambda[x.1 * np + y.1]), p.mul(x.1, y.1))
}

#[allow(clippy::too_many_arguments)]
fn search_lambda(
    p: &GroupTable,
    g: &GroupTable,
    auts: &[Vec<usize>],
    phi: &[usize],
    pairs: &[(usize, usize)],
    k: usize,
    lambda: &mut Vec<usize>,
    tables: &mut BTreeSet<Vec<usize>>,
    budget: &mut u128,
    caps: &Caps,
) -> Result<()> {
    let np = p.order();
    if k == pairs.len() {
        let ng = g.order();
        let order = np * ng;
        let mut rows = vec![vec![0; order]; order];
        for x in 0..order {
            for y in 0..order {
                let (e, q) = section_product(p, g, auts, phi, lambda, (x / np, x % np), (y / np, y % np));
                rows[x][y] = e * np + q;
            }
        }
        if GroupTable::validate(rows.clone()).is_ok() {
            tables.insert(rows.concat());
        }
        return Ok(());
    }
    let assigned = |a: usize, b: usize, upto: usize| a == 0 || b == 0 || pairs[..=upto].contains(&(a, b));
    for v in 0..g.order() {
        *budget += 1;
        Caps::check("extension search nodes", *budget, caps.monoidal)?;
        lambda[pairs[k].0 * np + pairs[k].1] = v;
        let mut ok = true;
        'check: for a in 1..np {
            for b in 1..np {
                for c in 1..np {
                    let needed = [(a, b), (p.mul(a, b), c), (b, c), (a, p.mul(b, c))];
                    if !needed.iter().all(|&(x, y)| assigned(x, y, k)) {
                        continue;
                    }
                    let s = |x: usize| (0, x);
                    let left = section_product(p, g, auts, phi, lambda, section_product(p, g, auts, phi, lambda, s(a), s(b)), s(c));
                    let right = section_product(p, g, auts, phi, lambda, s(a), section_product(p, g, auts, phi, lambda, s(b), s(c)));
                    if left != right {
                        ok = false;
                        break 'check;
                    }
                }
            }
        }
        if ok {
            search_lambda(p, g, auts, phi, pairs, k + 1, lambda, tables, budget, caps)?;
        }
    }
    lambda[pairs[k].0 * np + pairs[k].1] = 0;
    Ok(())
}

fn count_orbits(p: &GroupTable, g: &GroupTable, order: usize, tables: &BTreeSet<Vec<usize>>) -> usize {
    let (np, ng) = (p.order(), g.order());
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut orbits = 0;
    for t in tables {
        if seen.contains(t) {
            continue;
        }
        orbits += 1;
        let mut shift = vec![0usize; np];
        loop {
            // ψ(g, p) = (g·t(p), p); the transported law is ψ ∘ m ∘ (ψ⁻¹ × ψ⁻¹)
            let psi = |x: usize| g.mul(x / np, shift[x % np]) * np + x % np;
            let psi_inv = |x: usize| g.mul(x / np, g.inv(shift[x % np])) * np + x % np;
            let mut moved = vec![0; order * order];
            for x in 0..order {
                for y in 0..order {
                    moved[x * order + y] = psi(t[psi_inv(x) * order + psi_inv(y)]);
                }
            }
            seen.insert(moved);
            let mut i = np;
            loop {
                if i <= 1 {
                    break;
                }
                i -= 1;
                shift[i] += 1;
                if shift[i] < ng {
                    break;
                }
                shift[i] = 0;
            }
            if shift.iter().all(|&s| s == 0) {
                break;
            }
        }
    }
    orbits
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::Cochain;

    #[test]
    fn cocycle_counts() {
        let caps = Caps::default();
        let z2 = GroupTable::cyclic(2);
        let a2 = PModule::trivial(2, vec![2]).unwrap();
        assert_eq!(
            brute_cocycles(&z2, &a2, 2, &caps).unwrap(),
            BruteCohomology { cocycles: 2, coboundaries: 1, classes: 2 }
        );
        let triv = PModule::trivial(1, vec![3]).unwrap();
        for n in 1..4 {
            assert_eq!(brute_cocycles(&GroupTable::trivial(), &triv, n, &caps).unwrap().classes, 1);
        }
        let a = PModule::trivial(3, vec![2]).unwrap();
        assert_eq!(brute_cocycles(&GroupTable::cyclic(3), &a, 2, &caps).unwrap().classes, 1);
        // H¹(Z/2; Z/4 by inversion) = Z/2
        let inv = PModule::new(&z2, vec![4], &[vec![vec![1]], vec![vec![-1]]]).unwrap();
        assert_eq!(brute_cocycles(&z2, &inv, 1, &caps).unwrap().classes, 2);
    }

    #[test]
    fn node_budget() {
        let caps = Caps { cochains: 10, ..Caps::default() };
        let a = PModule::trivial(4, vec![4]).unwrap();
        assert!(brute_cocycles(&GroupTable::cyclic(4), &a, 3, &caps).unwrap_err().is_cap());
    }

    #[test]
    fn monoidal_counts() {
        let caps = Caps::default();
        let z2 = GroupTable::cyclic(2);
        let cases = [(1, vec![2], false, 2), (2, vec![], false, 2), (2, vec![2], true, 2), (2, vec![2], false, 4)];
        for (p, factors, k_nonzero, expected) in cases {
            let a = PModule::trivial(p, factors).unwrap();
            let entries = if k_nonzero { vec![(vec![1, 1, 1], vec![1])] } else { vec![] };
            let k = Cochain::from_entries(p, &a, 3, &entries).unwrap();
            let h = SkeletalGrCat::new(GroupTable::cyclic(p), a, k).unwrap();
            assert_eq!(brute_monoidal(&h, &z2, &caps).unwrap().len(), expected);
        }
    }

    #[test]
    fn extension_counts() {
        let caps = Caps::default();
        let z = GroupTable::cyclic;
        assert_eq!(brute_extensions(&z(2), &z(3), &caps).unwrap(), 2);
        assert_eq!(brute_extensions(&z(2), &z(2), &caps).unwrap(), 2);
        assert_eq!(brute_extensions(&GroupTable::trivial(), &z(5), &caps).unwrap(), 1);
        assert_eq!(brute_extensions(&z(2), &z(4), &caps).unwrap(), 4);
        assert!(brute_extensions(&z(4), &z(4), &caps).unwrap_err().is_cap());
    }
}
