use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, GroupViolation, Result};

/// A finite group given by its multiplication table. Element `0` is the
/// identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupTable {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
}

/// `G/N` with the minimal-index coset representatives.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub table: GroupTable,
    /// Element of `G` to coset index.
    pub projection: Vec<usize>,
    /// Coset index to its smallest element.
    pub transversal: Vec<usize>,
}

impl GroupTable {
    /// Checks the group axioms on a raw square table. All violations found
    /// are reported, each kind with its first witness.
    pub fn validate(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::malformed("group table is empty"));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::malformed(format!(
                    "row {i} has length {}, expected {n}",
                    row.len()
                )));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return Err(Error::malformed(format!("entry {x} in row {i} out of range")));
            }
        }
        let mul: Vec<usize> = table.into_iter().flatten().collect();
        let at = |a: usize, b: usize| mul[a * n + b];

        let mut violations = Vec::new();
        if let Some(x) = (0..n).find(|&x| at(0, x) != x || at(x, 0) != x) {
            violations.push(GroupViolation::NoIdentity(x));
        }
        let mut inv = vec![0; n];
        let mut missing = None;
        for x in 0..n {
            match (0..n).find(|&y| at(x, y) == 0 && at(y, x) == 0) {
                Some(y) => inv[x] = y,
                None => {
                    missing.get_or_insert(x);
                }
            }
        }
        if let Some(x) = missing {
            violations.push(GroupViolation::NoInverse(x));
        }
        'assoc: for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        violations.push(GroupViolation::NotAssociative(a, b, c));
                        break 'assoc;
                    }
                }
            }
        }
        if !violations.is_empty() {
            return Err(Error::InvalidGroup(violations));
        }
        Ok(GroupTable { order: n, mul, inv })
    }

    /// A table already known to satisfy the group axioms.
    pub(crate) fn from_mul_unchecked(order: usize, mul: Vec<usize>) -> Self {
        let inv = (0..order)
            .map(|x| (0..order).find(|&y| mul[x * order + y] == 0).expect("group table"))
            .collect();
        GroupTable { order, mul, inv }
    }

    pub fn trivial() -> Self {
        GroupTable { order: 1, mul: vec![0], inv: vec![0] }
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order 0");
        let mul = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
        let inv = (0..n).map(|a| (n - a) % n).collect();
        GroupTable { order: n, mul, inv }
    }

    /// Direct product; element `(a, b)` has index `a * |other| + b`.
    pub fn product(&self, other: &GroupTable) -> Self {
        let m = other.order;
        let n = self.order * m;
        let mut mul = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let (a1, b1) = (x / m, x % m);
                let (a2, b2) = (y / m, y % m);
                mul.push(self.mul(a1, a2) * m + other.mul(b1, b2));
            }
        }
        let inv = (0..n).map(|x| self.inv(x / m) * m + other.inv(x % m)).collect();
        GroupTable { order: n, mul, inv }
    }

    /// The permutation group generated by `gens` (images of `0..degree`).
    /// Elements are sorted lexicographically as image vectors, so the
    /// identity permutation comes first. Composition is `(στ)(i) = σ(τ(i))`.
    pub fn from_permutations(gens: &[Vec<usize>]) -> Result<Self> {
        let degree = gens.first().map_or(0, Vec::len);
        for g in gens {
            let mut seen = vec![false; degree];
            if g.len() != degree || g.iter().any(|&i| i >= degree || std::mem::replace(&mut seen[i], true)) {
                return Err(Error::malformed("generator is not a permutation of the common degree"));
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements: BTreeSet<Vec<usize>> = BTreeSet::new();
        elements.insert(identity.clone());
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y: Vec<usize> = x.iter().map(|&i| g[i]).collect();
                if elements.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let elements: Vec<Vec<usize>> = elements.into_iter().collect();
        Ok(Self::from_permutation_list(&elements))
    }

    /// Table of a list of permutations closed under composition, in the
    /// given order. The first entry must be the identity.
    pub(crate) fn from_permutation_list(perms: &[Vec<usize>]) -> Self {
        let index: HashMap<&[usize], usize> =
            perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
        let n = perms.len();
        let mut mul = Vec::with_capacity(n * n);
        for a in perms {
            for b in perms {
                let ab: Vec<usize> = b.iter().map(|&i| a[i]).collect();
                mul.push(index[ab.as_slice()]);
            }
        }
        let inv = (0..n)
            .map(|a| (0..n).find(|&b| mul[a * n + b] == 0).expect("closed permutation list"))
            .collect();
        GroupTable { order: n, mul, inv }
    }

    pub fn symmetric(degree: usize) -> Self {
        if degree < 2 {
            return Self::trivial();
        }
        let mut swap: Vec<usize> = (0..degree).collect();
        swap.swap(0, 1);
        let cycle: Vec<usize> = (0..degree).map(|i| (i + 1) % degree).collect();
        Self::from_permutations(&[swap, cycle]).expect("valid permutations")
    }

    pub fn dihedral(n: usize) -> Self {
        let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        Self::from_permutations(&[rot, refl]).expect("valid permutations")
    }

    pub fn quaternion() -> Self {
        // Left-regular action of i and j on {±1, ±i, ±j, ±k}, numbered
        // 1, i, j, k, -1, -i, -j, -k.
        let i = vec![1, 4, 3, 6, 5, 0, 7, 2];
        let j = vec![2, 7, 4, 1, 6, 3, 0, 5];
        Self::from_permutations(&[i, j]).expect("valid permutations")
    }

    pub fn alternating4() -> Self {
        Self::from_permutations(&[vec![1, 2, 0, 3], vec![0, 2, 3, 1]]).expect("valid permutations")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut acc = 0;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    /// `g h g⁻¹`.
    #[inline]
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.non_commuting_pair().is_none()
    }

    pub fn non_commuting_pair(&self) -> Option<(usize, usize)> {
        (0..self.order)
            .flat_map(|a| (a + 1..self.order).map(move |b| (a, b)))
            .find(|&(a, b)| self.mul(a, b) != self.mul(b, a))
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    /// Sorted elements of the subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order).filter(|&x| seen[x]).collect()
    }

    /// Greedy generating set: scan elements in index order and keep each one
    /// not already in the subgroup generated so far.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut inside = vec![false; self.order];
        inside[0] = true;
        for x in 1..self.order {
            if !inside[x] {
                gens.push(x);
                for y in self.subgroup_generated(&gens) {
                    inside[y] = true;
                }
            }
        }
        gens
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&z| (0..self.order).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    /// Conjugacy classes, each sorted, ordered by smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut class_of = vec![usize::MAX; self.order];
        let mut classes = Vec::new();
        for x in 0..self.order {
            if class_of[x] != usize::MAX {
                continue;
            }
            let members: BTreeSet<usize> = (0..self.order).map(|g| self.conj(g, x)).collect();
            for &m in &members {
                class_of[m] = classes.len();
            }
            classes.push(members.into_iter().collect());
        }
        classes
    }

    /// Table of the subgroup on `elements`, which must be sorted, contain 0
    /// and be closed. Returns the table together with the embedding.
    pub fn subgroup_table(&self, elements: &[usize]) -> (GroupTable, Vec<usize>) {
        debug_assert!(elements.first() == Some(&0));
        let pos: HashMap<usize, usize> = elements.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let n = elements.len();
        let mut mul = Vec::with_capacity(n * n);
        for &a in elements {
            for &b in elements {
                mul.push(pos[&self.mul(a, b)]);
            }
        }
        let inv = elements.iter().map(|&a| pos[&self.inv(a)]).collect();
        (GroupTable { order: n, mul, inv }, elements.to_vec())
    }

    pub fn is_normal(&self, subgroup: &[usize]) -> bool {
        let mut member = vec![false; self.order];
        for &h in subgroup {
            member[h] = true;
        }
        subgroup
            .iter()
            .all(|&h| (0..self.order).all(|g| member[self.conj(g, h)]))
    }

    /// Quotient by a normal subgroup. Cosets are numbered by increasing
    /// smallest element, so the identity coset is 0.
    pub fn quotient(&self, normal: &[usize]) -> Quotient {
        let mut projection = vec![usize::MAX; self.order];
        let mut transversal = Vec::new();
        for g in 0..self.order {
            if projection[g] != usize::MAX {
                continue;
            }
            for &h in normal {
                projection[self.mul(g, h)] = transversal.len();
            }
            transversal.push(g);
        }
        let n = transversal.len();
        let mut mul = Vec::with_capacity(n * n);
        for &a in &transversal {
            for &b in &transversal {
                mul.push(projection[self.mul(a, b)]);
            }
        }
        let inv = transversal.iter().map(|&a| projection[self.inv(a)]).collect();
        Quotient {
            table: GroupTable { order: n, mul, inv },
            projection,
            transversal,
        }
    }

    /// Checks that `map` (element images) is a homomorphism into `target`.
    pub fn is_hom_to(&self, target: &GroupTable, map: &[usize]) -> bool {
        map.len() == self.order
            && (0..self.order).all(|a| {
                (0..self.order).all(|b| map[self.mul(a, b)] == target.mul(map[a], map[b]))
            })
    }

    /// Extends generator images to a full element map, walking the Cayley
    /// graph for `gens`. Returns `None` if the images are inconsistent,
    /// i.e. do not define a homomorphism.
    pub fn extend_hom(&self, gens: &[usize], images: &[usize], target: &GroupTable) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; self.order];
        map[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for (&g, &img) in gens.iter().zip(images) {
                let y = self.mul(x, g);
                let expect = target.mul(map[x], img);
                if map[y] == usize::MAX {
                    map[y] = expect;
                    queue.push_back(y);
                } else if map[y] != expect {
                    return None;
                }
            }
        }
        if map.contains(&usize::MAX) {
            return None;
        }
        Some(map)
    }
}
