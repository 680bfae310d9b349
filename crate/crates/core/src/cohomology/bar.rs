use crate::algebra::{GroupTable, IntMatrix};
use crate::caps::Caps;
use crate::error::Result;
use crate::spaces::{n_tuples, tuple_at, tuple_index, Cochain, PModule};

/// `dc` for a normalized n-cochain `c`, evaluated pointwise:
///
/// ```text
/// (dc)(g₁,…,gₙ₊₁) = g₁·c(g₂,…,gₙ₊₁)
///                 + Σᵢ (−1)ⁱ c(g₁,…,gᵢgᵢ₊₁,…,gₙ₊₁)
///                 + (−1)ⁿ⁺¹ c(g₁,…,gₙ)
/// ```
pub fn coboundary(p: &GroupTable, a: &PModule, c: &Cochain) -> Cochain {
    let n = c.degree();
    let order = p.order();
    let mut out = Cochain::zero(order, a, n + 1);
    let mut merged = vec![0; n];
    for idx in 0..n_tuples(order, n + 1) {
        let g = tuple_at(order, n + 1, idx);
        let mut acc = a.act(g[0], &c.value(&g[1..]));
        for i in 1..=n {
            merged.clear();
            merged.extend_from_slice(&g[..i - 1]);
            merged.push(p.mul(g[i - 1], g[i]));
            merged.extend_from_slice(&g[i + 1..]);
            let v = c.value(&merged);
            acc = if i % 2 == 1 { a.sub(&acc, &v) } else { a.add(&acc, &v) };
        }
        let v = c.value(&g[..n]);
        acc = if (n + 1) % 2 == 1 { a.sub(&acc, &v) } else { a.add(&acc, &v) };
        out.set_index(idx, &acc);
    }
    out
}

pub fn is_cocycle(p: &GroupTable, a: &PModule, c: &Cochain) -> bool {
    coboundary(p, a, c).is_zero()
}

/// Entries of `dⁿ` as small integers, rows indexed by `Cⁿ⁺¹` coordinates
/// and columns by `Cⁿ` coordinates (tuple-major, module coordinate minor).
pub(crate) fn coboundary_entries(p: &GroupTable, a: &PModule, n: usize) -> Vec<Vec<i64>> {
    let order = p.order();
    let r = a.rank();
    let rows = n_tuples(order, n + 1) * r;
    let cols = n_tuples(order, n) * r;
    let mut m = vec![vec![0i64; cols]; rows];
    let mut merged = Vec::with_capacity(n);
    for idx in 0..n_tuples(order, n + 1) {
        let g = tuple_at(order, n + 1, idx);
        let block = |m: &mut Vec<Vec<i64>>, t: usize, sign: i64| {
            for i in 0..r {
                m[idx * r + i][t * r + i] += sign;
            }
        };
        if let Some(t) = tuple_index(order, &g[1..]) {
            let act = a.matrix(g[0]);
            for i in 0..r {
                for j in 0..r {
                    m[idx * r + i][t * r + j] += act[i][j] as i64;
                }
            }
        }
        for i in 1..=n {
            merged.clear();
            merged.extend_from_slice(&g[..i - 1]);
            merged.push(p.mul(g[i - 1], g[i]));
            merged.extend_from_slice(&g[i + 1..]);
            if let Some(t) = tuple_index(order, &merged) {
                block(&mut m, t, if i % 2 == 1 { -1 } else { 1 });
            }
        }
        if let Some(t) = tuple_index(order, &g[..n]) {
            block(&mut m, t, if (n + 1) % 2 == 1 { -1 } else { 1 });
        }
    }
    for (k, row) in m.iter_mut().enumerate() {
        let d = a.factors()[k % r] as i64;
        for x in row.iter_mut() {
            *x = x.rem_euclid(d);
        }
    }
    m
}

/// Integer matrix of `dⁿ: Cⁿ → Cⁿ⁺¹` on normalized cochains, with entries
/// in row `(t, i)` reduced modulo the i-th cyclic factor.
pub fn coboundary_matrix(p: &GroupTable, a: &PModule, n: usize, caps: &Caps) -> Result<IntMatrix> {
    check_dims(p, a, n, caps)?;
    let m = coboundary_entries(p, a, n);
    if m.is_empty() {
        return Ok(IntMatrix::zeros(0, n_tuples(p.order(), n) * a.rank()));
    }
    Ok(IntMatrix::from_rows(&m))
}

pub(crate) fn check_dims(p: &GroupTable, a: &PModule, n: usize, caps: &Caps) -> Result<()> {
    let dim = (p.order() as u128 - 1).saturating_pow(n as u32 + 1).saturating_mul(a.rank() as u128);
    Caps::check("coboundary matrix dimension", dim, caps.matrix_dim as u128)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d_squared_vanishes(p: &GroupTable, a: &PModule) {
        let caps = Caps::default();
        for n in 0..3 {
            let d0 = coboundary_matrix(p, a, n, &caps).unwrap();
            let d1 = coboundary_matrix(p, a, n + 1, &caps).unwrap();
            if d0.rows() == 0 || d0.cols() == 0 {
                continue;
            }
            let prod = d1.mul(&d0);
            let r = a.rank();
            for i in 0..prod.rows() {
                let d = num_bigint::BigInt::from(a.factors()[i % r]);
                for j in 0..prod.cols() {
                    assert_eq!(prod.get(i, j) % &d, 0.into(), "n={n} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn d_squared() {
        let s3 = GroupTable::symmetric(3);
        d_squared_vanishes(&s3, &PModule::trivial(6, vec![2]).unwrap());
        // sign action of S3 on Z/3
        let sign: Vec<Vec<Vec<i64>>> = (0..6)
            .map(|g| {
                let odd = s3.element_order(g) == 2;
                vec![vec![if odd { -1 } else { 1 }]]
            })
            .collect();
        d_squared_vanishes(&s3, &PModule::new(&s3, vec![3], &sign).unwrap());
        let z4 = GroupTable::cyclic(4);
        d_squared_vanishes(&z4, &PModule::trivial(4, vec![2, 4]).unwrap());
    }

    #[test]
    fn matrix_agrees_with_pointwise() {
        let z3 = GroupTable::cyclic(3);
        let a = PModule::trivial(3, vec![3]).unwrap();
        let c = Cochain::from_entries(3, &a, 1, &[(vec![1], vec![1]), (vec![2], vec![2])]).unwrap();
        let m = coboundary_entries(&z3, &a, 1);
        let dc = coboundary(&z3, &a, &c);
        for (row, &v) in m.iter().zip(dc.flat()) {
            let s: i64 = row.iter().zip(c.flat()).map(|(&x, &y)| x * y as i64).sum();
            assert_eq!(s.rem_euclid(3) as u64, v);
        }
        // c is the identity map Z/3 -> Z/3, a homomorphism
        assert!(dc.is_zero());
    }

    #[test]
    fn trivial_group_matrices_are_empty() {
        let p = GroupTable::trivial();
        let a = PModule::trivial(1, vec![2]).unwrap();
        let m = coboundary_matrix(&p, &a, 1, &Caps::default()).unwrap();
        assert_eq!((m.rows(), m.cols()), (0, 0));
        let m = coboundary_matrix(&p, &a, 0, &Caps::default()).unwrap();
        assert_eq!((m.rows(), m.cols()), (0, 1));
    }

    #[test]
    fn z2_degree_two() {
        let p = GroupTable::cyclic(2);
        let a = PModule::trivial(2, vec![2]).unwrap();
        let m = coboundary_matrix(&p, &a, 2, &Caps::default()).unwrap();
        assert_eq!((m.rows(), m.cols()), (1, 1));
        assert!(m.is_zero());
    }
}
