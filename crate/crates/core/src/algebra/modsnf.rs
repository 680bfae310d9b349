//! Smith normal form over `Z/m`. Entries stay reduced, so there is no
//! coefficient growth; diagonal entries are divisors of `m`.

use num_integer::Integer;

/// Dense matrix over `Z/m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModMatrix {
    rows: usize,
    cols: usize,
    m: u64,
    data: Vec<u64>,
}

impl ModMatrix {
    pub fn zeros(m: u64, rows: usize, cols: usize) -> Self {
        ModMatrix { rows, cols, m, data: vec![0; rows * cols] }
    }

    pub fn identity(m: u64, n: usize) -> Self {
        let mut a = Self::zeros(m, n, n);
        for i in 0..n {
            a.data[i * n + i] = 1 % m;
        }
        a
    }

    pub fn from_rows(m: u64, rows: &[Vec<i64>], cols: usize) -> Self {
        let mut a = Self::zeros(m, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                a.data[i * cols + j] = x.rem_euclid(m as i64) as u64;
            }
        }
        a
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: u64) {
        self.data[i * self.cols + j] = x % self.m;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows).map(|i| dot(self.row(i), v, self.m)).collect()
    }

    pub fn mul(&self, other: &ModMatrix) -> ModMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = ModMatrix::zeros(self.m, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = ((out.data[idx] as u128 + a as u128 * other.get(k, j) as u128) % self.m as u128) as u64;
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            for k in 0..self.cols {
                self.data.swap(i * self.cols + k, j * self.cols + k);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            for k in 0..self.rows {
                self.data.swap(k * self.cols + i, k * self.cols + j);
            }
        }
    }

    /// `(rᵢ, rⱼ) ← (a·rᵢ + b·rⱼ, c·rᵢ + d·rⱼ)`.
    fn row_comb(&mut self, i: usize, j: usize, [a, b, c, d]: [u64; 4]) {
        let m = self.m as u128;
        for k in 0..self.cols {
            let x = self.data[i * self.cols + k] as u128;
            let y = self.data[j * self.cols + k] as u128;
            if x == 0 && y == 0 {
                continue;
            }
            self.data[i * self.cols + k] = ((a as u128 * x + b as u128 * y) % m) as u64;
            self.data[j * self.cols + k] = ((c as u128 * x + d as u128 * y) % m) as u64;
        }
    }

    /// `(cᵢ, cⱼ) ← (a·cᵢ + b·cⱼ, c·cᵢ + d·cⱼ)`.
    fn col_comb(&mut self, i: usize, j: usize, [a, b, c, d]: [u64; 4]) {
        let m = self.m as u128;
        for k in 0..self.rows {
            let x = self.data[k * self.cols + i] as u128;
            let y = self.data[k * self.cols + j] as u128;
            if x == 0 && y == 0 {
                continue;
            }
            self.data[k * self.cols + i] = ((a as u128 * x + b as u128 * y) % m) as u64;
            self.data[k * self.cols + j] = ((c as u128 * x + d as u128 * y) % m) as u64;
        }
    }

    fn scale_row(&mut self, i: usize, v: u64) {
        let m = self.m as u128;
        for x in &mut self.data[i * self.cols..(i + 1) * self.cols] {
            *x = ((*x as u128 * v as u128) % m) as u64;
        }
    }

    fn scale_col(&mut self, j: usize, v: u64) {
        let m = self.m as u128;
        for k in 0..self.rows {
            let x = &mut self.data[k * self.cols + j];
            *x = ((*x as u128 * v as u128) % m) as u64;
        }
    }
}

pub(crate) fn dot(a: &[u64], b: &[u64], m: u64) -> u64 {
    let mut acc: u128 = 0;
    for (&x, &y) in a.iter().zip(b) {
        if x != 0 && y != 0 {
            acc = (acc + x as u128 * y as u128) % m as u128;
        }
    }
    acc as u64
}

/// Inverse of a unit `a` modulo `n`.
pub(crate) fn inv_mod(a: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let e = (a as i128).extended_gcd(&(n as i128));
    debug_assert_eq!(e.gcd, 1, "{a} is not a unit mod {n}");
    e.x.rem_euclid(n as i128) as u64
}

fn neg(x: u64, m: u64) -> u64 {
    (m - x % m) % m
}

/// A unit `v` with `a·v ≡ gcd(a, m)` (mod m).
fn normalizer(a: u64, m: u64) -> u64 {
    let g = a.gcd(&m);
    let mp = m / g;
    let v0 = inv_mod((a / g) % mp, mp);
    (0..)
        .map(|k| v0 + k * mp)
        .find(|v| v.gcd(&m) == 1)
        .expect("a unit lift exists")
}

/// `U · A · V = S` over `Z/m`, `S` diagonal with `s₁ | s₂ | …` (as
/// ideals), each nonzero `sᵢ` a proper divisor of `m`.
pub struct ModSnf {
    pub diag: Vec<u64>,
    pub rank: usize,
    pub u: Option<ModMatrix>,
    pub u_inv: Option<ModMatrix>,
    pub v: Option<ModMatrix>,
    pub v_inv: Option<ModMatrix>,
}

/// Which transforms to track: `[U, U⁻¹, V, V⁻¹]`.
pub fn smith_mod(a: ModMatrix, track: [bool; 4]) -> ModSnf {
    let m = a.m;
    let (r, c) = (a.rows, a.cols);
    let make = |on: bool, n: usize| on.then(|| ModMatrix::identity(m, n));
    let mut calc = Calc {
        u: make(track[0], r),
        u_inv: make(track[1], r),
        v: make(track[2], c),
        v_inv: make(track[3], c),
        a,
    };
    let rank = calc.run();
    let diag = (0..r.min(c)).map(|i| calc.a.get(i, i)).collect();
    ModSnf { diag, rank, u: calc.u, u_inv: calc.u_inv, v: calc.v, v_inv: calc.v_inv }
}

struct Calc {
    a: ModMatrix,
    u: Option<ModMatrix>,
    u_inv: Option<ModMatrix>,
    v: Option<ModMatrix>,
    v_inv: Option<ModMatrix>,
}

impl Calc {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = &mut self.u {
            u.swap_rows(i, j);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.swap_cols(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = &mut self.v {
            v.swap_cols(i, j);
        }
        if let Some(vi) = &mut self.v_inv {
            vi.swap_rows(i, j);
        }
    }

    /// Rows `(i, j)` ← `E·(i, j)` for `E = [[α, β], [γ, δ]]` of determinant 1.
    fn row_op(&mut self, i: usize, j: usize, e: [u64; 4]) {
        let m = self.a.m;
        let [al, be, ga, de] = e;
        self.a.row_comb(i, j, e);
        if let Some(u) = &mut self.u {
            u.row_comb(i, j, e);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.col_comb(i, j, [de, neg(ga, m), neg(be, m), al]);
        }
    }

    fn col_op(&mut self, i: usize, j: usize, e: [u64; 4]) {
        let m = self.a.m;
        let [al, be, ga, de] = e;
        self.a.col_comb(i, j, e);
        if let Some(v) = &mut self.v {
            v.col_comb(i, j, e);
        }
        if let Some(vi) = &mut self.v_inv {
            vi.row_comb(i, j, [de, neg(ga, m), neg(be, m), al]);
        }
    }

    fn scale_row(&mut self, i: usize, unit: u64) {
        let m = self.a.m;
        self.a.scale_row(i, unit);
        if let Some(u) = &mut self.u {
            u.scale_row(i, unit);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.scale_col(i, inv_mod(unit, m));
        }
    }

    /// Elimination matrix clearing `b` against pivot `a`: first row gives
    /// the new pivot, second row the zero.
    fn eliminator(a: u64, b: u64, m: u64) -> [u64; 4] {
        let ga = a.gcd(&m);
        if b.is_multiple_of(ga) {
            let mp = m / ga;
            let q = ((b / ga) as u128 * inv_mod((a / ga) % mp, mp) as u128 % mp as u128) as u64;
            [1 % m, 0, neg(q, m), 1 % m]
        } else {
            let e = (a as i128).extended_gcd(&(b as i128));
            let g = e.gcd;
            let red = |x: i128| x.rem_euclid(m as i128) as u64;
            [red(e.x), red(e.y), red(-(b as i128) / g), red(a as i128 / g)]
        }
    }

    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let m = self.a.m;
        let mut best: Option<(u64, usize, usize)> = None;
        for i in t..self.a.rows {
            for (j, &x) in self.a.row(i).iter().enumerate().skip(t) {
                if x == 0 {
                    continue;
                }
                let g = x.gcd(&m);
                if best.is_none_or(|(bg, _, _)| g < bg) {
                    best = Some((g, i, j));
                    if g == 1 {
                        return Some((i, j));
                    }
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    fn run(&mut self) -> usize {
        let m = self.a.m;
        let (r, c) = (self.a.rows, self.a.cols);
        let mut t = 0;
        while t < r.min(c) {
            let Some((pi, pj)) = self.pivot(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                for i in t + 1..r {
                    let b = self.a.get(i, t);
                    if b != 0 {
                        let e = Self::eliminator(self.a.get(t, t), b, m);
                        self.row_op(t, i, e);
                    }
                }
                let mut clean = true;
                for j in t + 1..c {
                    let b = self.a.get(t, j);
                    if b != 0 {
                        let e = Self::eliminator(self.a.get(t, t), b, m);
                        self.col_op(t, j, e);
                    }
                }
                if (t + 1..r).any(|i| self.a.get(i, t) != 0) {
                    clean = false;
                }
                if !clean {
                    continue;
                }
                let g = self.a.get(t, t).gcd(&m);
                let bad = (t + 1..r).find(|&i| self.a.row(i)[t + 1..].iter().any(|&x| x % g != 0));
                match bad {
                    Some(i) => self.row_op(t, i, [1 % m, 1 % m, 0, 1 % m]),
                    None => break,
                }
            }
            let p = self.a.get(t, t);
            let unit = normalizer(p, m);
            if unit != 1 {
                self.scale_row(t, unit);
            }
            t += 1;
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: u64, rows: &[Vec<i64>]) -> ModSnf {
        let cols = rows.first().map_or(0, Vec::len);
        let a = ModMatrix::from_rows(m, rows, cols);
        let snf = smith_mod(a.clone(), [true; 4]);
        let (u, ui, v, vi) = (
            snf.u.clone().unwrap(),
            snf.u_inv.clone().unwrap(),
            snf.v.clone().unwrap(),
            snf.v_inv.clone().unwrap(),
        );
        assert_eq!(u.mul(&ui), ModMatrix::identity(m, a.rows()));
        assert_eq!(v.mul(&vi), ModMatrix::identity(m, a.cols()));
        let s = u.mul(&a).mul(&v);
        for i in 0..s.rows() {
            for j in 0..s.cols() {
                let expect = if i == j { snf.diag[i] } else { 0 };
                assert_eq!(s.get(i, j), expect, "({i},{j})");
            }
        }
        for w in snf.diag[..snf.rank].windows(2) {
            assert_eq!(w[1] % w[0], 0);
        }
        for &d in &snf.diag[..snf.rank] {
            assert_eq!(m % d, 0);
        }
        snf
    }

    #[test]
    fn coprime_pivots_merge() {
        let snf = check(6, &[vec![2, 0], vec![0, 3]]);
        assert_eq!(snf.diag, vec![1, 0]);
        assert_eq!(snf.rank, 1);
    }

    #[test]
    fn prime_power() {
        let snf = check(8, &[vec![4, 2], vec![6, 4]]);
        assert_eq!(snf.diag, vec![2, 2]);
        // second determinantal divisor is 16 ≡ 0
        let snf = check(8, &[vec![2, 4, 6], vec![4, 0, 4]]);
        assert_eq!(&snf.diag[..snf.rank], &[2]);
    }

    #[test]
    fn units_are_normalized() {
        let snf = check(12, &[vec![5, 7], vec![11, 1]]);
        assert!(snf.diag.iter().all(|&d| d == 0 || 12 % d == 0));
    }

    #[test]
    fn zero_and_empty() {
        let snf = check(4, &[vec![0, 0]]);
        assert_eq!(snf.rank, 0);
        let a = ModMatrix::zeros(5, 0, 3);
        let snf = smith_mod(a, [true; 4]);
        assert_eq!(snf.rank, 0);
    }

    #[test]
    fn random_matrices() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for m in [2u64, 4, 6, 12, 36] {
            for _ in 0..10 {
                let rows: Vec<Vec<i64>> = (0..4).map(|_| (0..5).map(|_| rng.gen_range(0..40)).collect()).collect();
                check(m, &rows);
            }
        }
    }
}
