use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

/// Smith normal form `D = L·M·R`.
#[derive(Clone, Debug)]
pub struct Smith {
    /// Diagonal of `D`, length `min(rows, cols)`, each dividing the next.
    pub diag: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = IntMatrix::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(x));
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, o: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, o.rows);
        let mut m = IntMatrix::zero(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        m.data[i * o.cols + j] += a * b;
                    }
                }
            }
        }
        m
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        if n == 0 {
            return BigInt::one();
        }
        sign * a.get(n - 1, n - 1)
    }

    fn swap_rows(&mut self, i: usize, k: usize) {
        if i == k {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(i * self.cols + j, k * self.cols + j);
        }
    }

    fn swap_cols(&mut self, j: usize, k: usize) {
        if j == k {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + j, i * self.cols + k);
        }
    }

    /// row_i += c·row_k
    fn add_row(&mut self, i: usize, k: usize, c: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(k, j) * c;
            if !v.is_zero() {
                self.data[i * self.cols + j] += v;
            }
        }
    }

    /// col_j += c·col_k
    fn add_col(&mut self, j: usize, k: usize, c: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, k) * c;
            if !v.is_zero() {
                self.data[i * self.cols + j] += v;
            }
        }
    }

    fn neg_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }

    pub fn smith(&self) -> Smith {
        let (r, c) = (self.rows, self.cols);
        let mut d = self.clone();
        let mut left = IntMatrix::identity(r);
        let mut right = IntMatrix::identity(c);
        let n = r.min(c);
        for t in 0..n {
            // smallest nonzero entry of the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    let v = d.get(i, j);
                    if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < d.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            d.swap_rows(t, bi);
            left.swap_rows(t, bi);
            d.swap_cols(t, bj);
            right.swap_cols(t, bj);
            loop {
                let mut dirty = false;
                for i in t + 1..r {
                    if d.get(i, t).is_zero() {
                        continue;
                    }
                    let q = d.get(i, t).div_floor(d.get(t, t));
                    d.add_row(i, t, &-&q);
                    left.add_row(i, t, &-&q);
                    if !d.get(i, t).is_zero() {
                        d.swap_rows(t, i);
                        left.swap_rows(t, i);
                        dirty = true;
                    }
                }
                for j in t + 1..c {
                    if d.get(t, j).is_zero() {
                        continue;
                    }
                    let q = d.get(t, j).div_floor(d.get(t, t));
                    d.add_col(j, t, &-&q);
                    right.add_col(j, t, &-&q);
                    if !d.get(t, j).is_zero() {
                        d.swap_cols(t, j);
                        right.swap_cols(t, j);
                        dirty = true;
                    }
                }
                if dirty {
                    continue;
                }
                // divisibility of the rest of the block
                let p = d.get(t, t).clone();
                let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !d.get(i, j).is_multiple_of(&p)));
                match bad {
                    Some(i) => {
                        d.add_row(t, i, &BigInt::one());
                        left.add_row(t, i, &BigInt::one());
                    }
                    None => break,
                }
            }
            if d.get(t, t).is_negative() {
                d.neg_row(t);
                left.neg_row(t);
            }
        }
        let diag = (0..n).map(|i| d.get(i, i).clone()).collect();
        Smith { diag, left, right }
    }
}
