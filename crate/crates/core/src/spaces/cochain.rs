use crate::error::{Error, Result};

use super::module::PModule;

/// A normalized n-cochain `Pⁿ → A`. Only tuples of non-identity elements
/// are stored, in lexicographic order of `(P∖{e})ⁿ`; any tuple containing
/// the identity has value zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain {
    degree: usize,
    p_order: usize,
    factors: Vec<u64>,
    values: Vec<u64>,
}

/// Number of stored tuples, `(|P| - 1)ⁿ`.
pub fn n_tuples(p_order: usize, degree: usize) -> usize {
    (p_order - 1).pow(degree as u32)
}

/// Lexicographic index of a tuple of non-identity elements.
pub fn tuple_index(p_order: usize, tuple: &[usize]) -> Option<usize> {
    let base = p_order - 1;
    let mut idx = 0;
    for &x in tuple {
        if x == 0 {
            return None;
        }
        idx = idx * base + (x - 1);
    }
    Some(idx)
}

pub fn tuple_at(p_order: usize, degree: usize, mut index: usize) -> Vec<usize> {
    let base = p_order - 1;
    let mut t = vec![0; degree];
    for slot in t.iter_mut().rev() {
        *slot = index % base + 1;
        index /= base;
    }
    t
}

impl Cochain {
    pub fn zero(p_order: usize, module: &PModule, degree: usize) -> Self {
        Cochain {
            degree,
            p_order,
            factors: module.factors().to_vec(),
            values: vec![0; n_tuples(p_order, degree) * module.rank()],
        }
    }

    /// Builds a cochain from sparse `(tuple, value)` entries. Entries on
    /// identity-containing tuples must be zero.
    pub fn from_entries(
        p_order: usize,
        module: &PModule,
        degree: usize,
        entries: &[(Vec<usize>, Vec<i64>)],
    ) -> Result<Self> {
        let mut c = Self::zero(p_order, module, degree);
        for (tuple, value) in entries {
            if tuple.len() != degree || tuple.iter().any(|&x| x >= p_order) {
                return Err(Error::malformed(format!("cochain tuple {tuple:?} out of range")));
            }
            if value.len() != module.rank() {
                return Err(Error::malformed(format!(
                    "cochain value {value:?} must have {} coordinates",
                    module.rank()
                )));
            }
            let v = module.reduce(value);
            match tuple_index(p_order, tuple) {
                Some(i) => c.set_index(i, &v),
                None if v.iter().all(|&x| x == 0) => {}
                None => {
                    return Err(Error::malformed(format!(
                        "normalized cochain must vanish on {tuple:?}"
                    )))
                }
            }
        }
        Ok(c)
    }

    /// Builds a cochain from a flat coordinate vector (tuple-major).
    pub(crate) fn from_flat(p_order: usize, degree: usize, factors: &[u64], values: Vec<u64>) -> Self {
        debug_assert_eq!(values.len(), n_tuples(p_order, degree) * factors.len());
        Cochain { degree, p_order, factors: factors.to_vec(), values }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn p_order(&self) -> usize {
        self.p_order
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn len(&self) -> usize {
        n_tuples(self.p_order, self.degree)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn flat(&self) -> &[u64] {
        &self.values
    }

    pub fn at_index(&self, i: usize) -> &[u64] {
        let r = self.rank();
        &self.values[i * r..(i + 1) * r]
    }

    pub fn set_index(&mut self, i: usize, v: &[u64]) {
        let r = self.rank();
        self.values[i * r..(i + 1) * r].copy_from_slice(v);
    }

    /// Value on an arbitrary tuple (zero when it contains the identity).
    pub fn value(&self, tuple: &[usize]) -> Vec<u64> {
        match tuple_index(self.p_order, tuple) {
            Some(i) => self.at_index(i).to_vec(),
            None => vec![0; self.rank()],
        }
    }

    pub fn set(&mut self, tuple: &[usize], v: &[u64]) {
        let i = tuple_index(self.p_order, tuple).expect("normalized cochains skip identity tuples");
        self.set_index(i, v);
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        let r = self.rank();
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .enumerate()
            .map(|(k, (a, b))| (a + b) % self.factors[k % r])
            .collect();
        Cochain { values, ..self.clone() }
    }

    pub fn neg(&self) -> Cochain {
        let r = self.rank();
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let d = self.factors[k % r];
                (d - a % d) % d
            })
            .collect();
        Cochain { values, ..self.clone() }
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: u64) -> Cochain {
        let r = self.rank();
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(i, &a)| ((a as u128 * k as u128) % self.factors[i % r] as u128) as u64)
            .collect();
        Cochain { values, ..self.clone() }
    }

    /// Nonzero `(tuple, value)` entries in tuple order.
    pub fn entries(&self) -> Vec<(Vec<usize>, Vec<u64>)> {
        (0..self.len())
            .filter(|&i| self.at_index(i).iter().any(|&x| x != 0))
            .map(|i| (tuple_at(self.p_order, self.degree, i), self.at_index(i).to_vec()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuple_indexing_round_trips() {
        for p in 2..5 {
            for n in 0..4 {
                for i in 0..n_tuples(p, n) {
                    assert_eq!(tuple_index(p, &tuple_at(p, n, i)), Some(i));
                }
            }
        }
        assert_eq!(tuple_index(3, &[1, 0]), None);
    }

    #[test]
    fn entries_and_normalization() {
        let a = PModule::trivial(3, vec![2]).unwrap();
        let c = Cochain::from_entries(3, &a, 2, &[(vec![1, 2], vec![1]), (vec![0, 1], vec![0])]).unwrap();
        assert_eq!(c.value(&[1, 2]), vec![1]);
        assert_eq!(c.value(&[0, 2]), vec![0]);
        assert_eq!(c.entries(), vec![(vec![1, 2], vec![1])]);
        assert!(Cochain::from_entries(3, &a, 2, &[(vec![0, 1], vec![1])]).is_err());
        assert!(Cochain::from_entries(3, &a, 2, &[(vec![1], vec![1])]).is_err());
        assert!(c.add(&c).is_zero());
    }

    #[test]
    fn degree_zero_has_one_slot() {
        let a = PModule::trivial(1, vec![5]).unwrap();
        let c = Cochain::zero(1, &a, 0);
        assert_eq!(c.len(), 1);
        assert_eq!(Cochain::zero(1, &a, 2).len(), 0);
    }
}
