use std::ops::{Index, IndexMut};

use crate::error::{ForgeError, Result};
use crate::exact::{Polynomial, Scalar};
use crate::linalg::echelon::{Coordinatizer, Echelon};
use crate::linalg::sparse::{DenseAcc, SparseMatrix, SparseVec};

/// Dense row-major matrix over Q(ω).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect())
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_sparse(&self, i: usize) -> SparseVec {
        SparseVec::from_dense(self.row(i))
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut m = Matrix::zero(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        m.data[i * o.cols + j].add_mul(a, b);
                    }
                }
            }
        }
        m
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut s = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    s.add_mul(a, b);
                }
                s
            })
            .collect()
    }

    pub fn to_sparse(&self) -> SparseMatrix {
        SparseMatrix::from_cols(self.rows, (0..self.cols).map(|j| SparseVec::from_dense(&self.col(j))).collect())
    }

    pub fn from_sparse(m: &SparseMatrix) -> Matrix {
        let mut d = Matrix::zero(m.rows, m.ncols());
        for (j, c) in m.cols.iter().enumerate() {
            for (i, x) in c.iter() {
                d[(i, j)] = x.clone();
            }
        }
        d
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.cols);
        let mut acc = DenseAcc::new(self.cols);
        for i in 0..self.rows {
            e.insert_with(&self.row_sparse(i), &mut acc);
        }
        e
    }

    /// Reduced row echelon form, rank and pivot columns.
    pub fn rref(&self) -> (Matrix, usize, Vec<usize>) {
        let e = self.echelon();
        let mut out = Matrix::zero(self.rows, self.cols);
        let mut piv: Vec<usize> = e.pivots().to_vec();
        piv.sort_unstable();
        for (i, r) in e.sorted_rows().iter().enumerate() {
            for (j, x) in r.iter() {
                out[(i, j)] = x.clone();
            }
        }
        (out, e.rank(), piv)
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Basis of the right kernel.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        self.echelon().nullspace().iter().map(|v| v.to_dense(self.cols)).collect()
    }

    /// Some solution of `self · x = b`, if one exists.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        // eliminate on the augmented rows [A | b]
        let mut e = Echelon::new(self.cols + 1);
        for i in 0..self.rows {
            let mut r = self.row(i).to_vec();
            r.push(b[i].clone());
            e.insert(&SparseVec::from_dense(&r));
        }
        if e.is_pivot(self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (row, &p) in e.rows().iter().zip(e.pivots()) {
            x[p] = row.get(self.cols);
        }
        Some(x)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(ForgeError::NotSquare);
        }
        let n = self.rows;
        let mut e = Echelon::new(2 * n);
        for i in 0..n {
            let mut r = self.row(i).to_vec();
            r.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
            e.insert(&SparseVec::from_dense(&r));
        }
        if e.rank() < n || e.pivots().iter().any(|&p| p >= n) {
            return Err(ForgeError::DivisionByZero);
        }
        let mut inv = Matrix::zero(n, n);
        for (row, &p) in e.rows().iter().zip(e.pivots()) {
            for (j, x) in row.slice(n, 2 * n).iter() {
                inv[(p, j)] = x.clone();
            }
        }
        Ok(inv)
    }

    pub fn minimal_polynomial(&self) -> Result<Polynomial> {
        if !self.is_square() {
            return Err(ForgeError::NotSquare);
        }
        Ok(minimal_polynomial(&self.to_sparse()))
    }

    /// Evaluate a polynomial at this square matrix.
    pub fn eval_poly(&self, p: &Polynomial) -> Matrix {
        let n = self.rows;
        let mut acc = Matrix::zero(n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self).add(&Matrix::identity(n).scale(c));
        }
        acc
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

/// Minimal polynomial as the lcm of Krylov annihilators of the basis vectors.
pub fn minimal_polynomial(m: &SparseMatrix) -> Polynomial {
    let n = m.rows;
    assert_eq!(n, m.ncols(), "square operator required");
    let mut invariant = Echelon::new(n);
    let mut acc = DenseAcc::new(n);
    let mut result = Polynomial::one();
    for j in 0..n {
        let e = SparseVec::unit(j);
        if invariant.contains(&e) {
            continue;
        }
        let mut chain = Coordinatizer::new(n, n);
        let mut v = e;
        let p = loop {
            if let Some(c) = chain.coords(&v) {
                let d = chain.len();
                let mut coeffs = vec![Scalar::zero(); d + 1];
                for (i, x) in c.iter() {
                    coeffs[i] = -x;
                }
                coeffs[d] = Scalar::one();
                break Polynomial::new(coeffs);
            }
            chain.push(&v);
            invariant.insert_with(&v, &mut acc);
            v = m.apply_with(&v, &mut acc);
        };
        result = Polynomial::lcm(&result, &p).expect("nonzero annihilators");
        if invariant.rank() == n {
            break;
        }
    }
    result
}
