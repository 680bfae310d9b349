//! Exact integer matrices and the Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for row in &self.data {
            let cells: Vec<String> = row.iter().map(BigInt::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![vec![BigInt::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = BigInt::one();
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().map(|r| r.iter().map(|&x| x.into()).collect()).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i][j] = value;
    }

    pub fn add_to(&mut self, i: usize, j: usize, delta: i64) {
        self.data[i][j] += delta;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().flatten().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k][j];
                    if !b.is_zero() {
                        out.data[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// `[self | other]`.
    pub fn hconcat(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows, "row count mismatch");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.iter().chain(b).cloned().collect())
            .collect();
        IntMatrix { rows: self.rows, cols: self.cols + other.cols, data }
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.data[i][j].is_zero()))
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols)).map(|i| self.data[i][i].clone()).collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }
}

/// `U · M · V = S` with `U`, `V` unimodular and `S` diagonal with
/// `d₁ | d₂ | …`, all `dᵢ ≥ 0`. The inverses of `U` and `V` are kept too.
#[derive(Clone, Debug)]
pub struct Snf {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
    pub rank: usize,
}

impl Snf {
    /// Nonzero diagonal entries `d₁ | … | d_rank`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.s.get(i, i).clone()).collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let mut calc = SnfCalc::new(m.clone(), [true; 4]);
    calc.run();
    let rank = calc.rank;
    let [u, u_inv, v, v_inv] = calc.trans.map(|t| t.expect("tracked"));
    Snf { u, s: calc.a, v, u_inv, v_inv, rank }
}

/// Invariant factors only; no transforms are tracked.
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let mut calc = SnfCalc::new(m.clone(), [false; 4]);
    calc.run();
    calc.a.diagonal().into_iter().take(calc.rank).collect()
}

/// Which transforms to track: `[U, U⁻¹, V, V⁻¹]`.
pub(crate) type Track = [bool; 4];

/// Diagonal and `V⁻¹` only.
pub(crate) struct PartialSnf {
    pub s: IntMatrix,
    pub v_inv: IntMatrix,
}

pub(crate) fn smith_partial(m: IntMatrix) -> PartialSnf {
    let mut calc = SnfCalc::new(m, [false, false, false, true]);
    calc.run();
    let [_, _, _, v_inv] = calc.trans;
    PartialSnf { s: calc.a, v_inv: v_inv.expect("tracked") }
}

struct SnfCalc {
    a: IntMatrix,
    // U, U⁻¹, V, V⁻¹
    trans: [Option<IntMatrix>; 4],
    rank: usize,
}

impl SnfCalc {
    fn new(a: IntMatrix, track: Track) -> Self {
        let (r, c) = (a.rows, a.cols);
        let make = |on: bool, n: usize| on.then(|| IntMatrix::identity(n));
        SnfCalc {
            trans: [make(track[0], r), make(track[1], r), make(track[2], c), make(track[3], c)],
            a,
            rank: 0,
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.data.swap(i, j);
        if let Some(u) = &mut self.trans[0] {
            u.data.swap(i, j);
        }
        if let Some(ui) = &mut self.trans[1] {
            for row in &mut ui.data {
                row.swap(i, j);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in &mut self.a.data {
            row.swap(i, j);
        }
        if let Some(v) = &mut self.trans[2] {
            for row in &mut v.data {
                row.swap(i, j);
            }
        }
        if let Some(vi) = &mut self.trans[3] {
            vi.data.swap(i, j);
        }
    }

    /// row_i -= q · row_t
    fn row_sub(&mut self, i: usize, t: usize, q: &BigInt, from: usize) {
        let (ri, rt) = two_rows(&mut self.a.data, i, t);
        for j in from..ri.len() {
            if !rt[j].is_zero() {
                ri[j] -= q * &rt[j];
            }
        }
        if let Some(u) = &mut self.trans[0] {
            let (ri, rt) = two_rows(&mut u.data, i, t);
            for (x, y) in ri.iter_mut().zip(rt.iter()) {
                if !y.is_zero() {
                    *x -= q * y;
                }
            }
        }
        // U⁻¹: col_t += q · col_i
        if let Some(ui) = &mut self.trans[1] {
            for row in &mut ui.data {
                if !row[i].is_zero() {
                    let d = q * &row[i];
                    row[t] += d;
                }
            }
        }
    }

    /// col_j -= q · col_t
    fn col_sub(&mut self, j: usize, t: usize, q: &BigInt, from: usize) {
        for row in &mut self.a.data[from..] {
            if !row[t].is_zero() {
                let d = q * &row[t];
                row[j] -= d;
            }
        }
        if let Some(v) = &mut self.trans[2] {
            for row in &mut v.data {
                if !row[t].is_zero() {
                    let d = q * &row[t];
                    row[j] -= d;
                }
            }
        }
        // V⁻¹: row_t += q · row_j
        if let Some(vi) = &mut self.trans[3] {
            let (rt, rj) = two_rows(&mut vi.data, t, j);
            for (x, y) in rt.iter_mut().zip(rj.iter()) {
                if !y.is_zero() {
                    *x += q * y;
                }
            }
        }
    }

    fn negate_row(&mut self, t: usize) {
        for x in &mut self.a.data[t] {
            *x = -&*x;
        }
        if let Some(u) = &mut self.trans[0] {
            for x in &mut u.data[t] {
                *x = -&*x;
            }
        }
        if let Some(ui) = &mut self.trans[1] {
            for row in &mut ui.data {
                row[t] = -&row[t];
            }
        }
    }

    fn min_nonzero(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows {
            for j in t..self.a.cols {
                let x = &self.a.data[i][j];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < self.a.data[bi][bj].abs()) {
                    if x.abs().is_one() {
                        return Some((i, j));
                    }
                    best = Some((i, j));
                }
            }
        }
        best
    }

    fn run(&mut self) {
        let (r, c) = (self.a.rows, self.a.cols);
        let mut t = 0;
        while t < r.min(c) {
            let Some((pi, pj)) = self.min_nonzero(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut clean = true;
                for i in t + 1..r {
                    if self.a.data[i][t].is_zero() {
                        continue;
                    }
                    let (q, rem) = self.a.data[i][t].div_rem(&self.a.data[t][t]);
                    self.row_sub(i, t, &q, t);
                    if !rem.is_zero() {
                        clean = false;
                    }
                }
                for j in t + 1..c {
                    if self.a.data[t][j].is_zero() {
                        continue;
                    }
                    let (q, rem) = self.a.data[t][j].div_rem(&self.a.data[t][t]);
                    self.col_sub(j, t, &q, t);
                    if !rem.is_zero() {
                        clean = false;
                    }
                }
                if !clean {
                    // bring the smallest remainder into the pivot position
                    let mut best: Option<(bool, usize)> = None;
                    let mut best_abs = self.a.data[t][t].abs();
                    for i in t + 1..r {
                        let x = self.a.data[i][t].abs();
                        if !x.is_zero() && x < best_abs {
                            best_abs = x;
                            best = Some((true, i));
                        }
                    }
                    for j in t + 1..c {
                        let x = self.a.data[t][j].abs();
                        if !x.is_zero() && x < best_abs {
                            best_abs = x;
                            best = Some((false, j));
                        }
                    }
                    match best {
                        Some((true, i)) => self.swap_rows(t, i),
                        Some((false, j)) => self.swap_cols(t, j),
                        None => {}
                    }
                    continue;
                }
                let pivot = self.a.data[t][t].clone();
                let bad = (t + 1..r).find(|&i| {
                    (t + 1..c).any(|j| !self.a.data[i][j].is_multiple_of(&pivot))
                });
                match bad {
                    Some(i) => {
                        // row_t += row_i, then the row sweep sees a remainder
                        self.row_sub(t, i, &BigInt::from(-1), t);
                    }
                    None => break,
                }
            }
            if self.a.data[t][t].is_negative() {
                self.negate_row(t);
            }
            t += 1;
        }
        self.rank = t;
    }
}

fn two_rows<T>(data: &mut [Vec<T>], i: usize, j: usize) -> (&mut Vec<T>, &Vec<T>) {
    assert_ne!(i, j);
    if i < j {
        let (lo, hi) = data.split_at_mut(j);
        (&mut lo[i], &hi[0])
    } else {
        let (lo, hi) = data.split_at_mut(i);
        (&mut hi[0], &lo[j])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> Snf {
        let snf = smith_normal_form(m);
        assert_eq!(snf.u.mul(m).mul(&snf.v), snf.s);
        assert_eq!(snf.u.mul(&snf.u_inv), IntMatrix::identity(m.rows()));
        assert_eq!(snf.v.mul(&snf.v_inv), IntMatrix::identity(m.cols()));
        assert!(snf.s.is_diagonal());
        snf
    }

    #[test]
    fn diag_2_3() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let snf = check(&m);
        assert_eq!(snf.s, IntMatrix::from_rows(&[vec![1, 0], vec![0, 6]]));
    }

    #[test]
    fn zero_matrix() {
        let m = IntMatrix::zeros(2, 3);
        let snf = check(&m);
        assert!(snf.s.is_zero());
        assert_eq!(snf.u, IntMatrix::identity(2));
        assert_eq!(snf.v, IntMatrix::identity(3));
        assert_eq!(snf.rank, 0);
    }

    #[test]
    fn one_by_one() {
        let snf = check(&IntMatrix::from_rows(&[vec![1]]));
        assert_eq!(snf.s, IntMatrix::from_rows(&[vec![1]]));
        let snf = check(&IntMatrix::from_rows(&[vec![-4]]));
        assert_eq!(snf.s, IntMatrix::from_rows(&[vec![4]]));
    }

    #[test]
    fn classic_example() {
        let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let snf = check(&m);
        assert_eq!(snf.invariant_factors(), vec![2.into(), 6.into(), 12.into()]);
    }

    #[test]
    fn empty_dimensions() {
        let snf = check(&IntMatrix::zeros(0, 3));
        assert_eq!(snf.rank, 0);
        let snf = check(&IntMatrix::zeros(2, 0));
        assert_eq!(snf.rank, 0);
    }

    #[test]
    fn determinant_bareiss() {
        let m = IntMatrix::from_rows(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        assert_eq!(m.determinant(), BigInt::from(4));
        assert_eq!(IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).determinant(), BigInt::from(-1));
    }
}
