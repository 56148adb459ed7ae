//! Structure-constant algebras, their elements and forms, and identity checkers.

mod spaces;
mod verify;

pub(crate) use spaces::{derivation_rows, skew_rows};
pub use spaces::{commutative_center, derivation_algebra, is_derivation, orthogonal_algebra, solve_constraints, subalgebra_generated};
pub use verify::{verify_composition, verify_jordan, verify_lie, verify_symmetric, JacobiPolicy};

use crate::error::{ForgeError, Result};
use crate::exact::Scalar;
use crate::linalg::{DenseAcc, Matrix, SparseMatrix, SparseVec};

/// Finite-dimensional algebra given by structure constants `e_i e_j`,
/// with an optional symmetric polar form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    dim: usize,
    name: String,
    table: Vec<SparseVec>,
    polar: Option<Matrix>,
}

impl Algebra {
    pub fn new(dim: usize, name: &str) -> Self {
        Algebra { dim, name: name.to_string(), table: vec![SparseVec::new(); dim * dim], polar: None }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: &str) {
        self.name = name.to_string();
    }

    pub fn set_product(&mut self, i: usize, j: usize, v: SparseVec) {
        assert!(v.max_index().is_none_or(|m| m < self.dim), "product out of range");
        self.table[i * self.dim + j] = v;
    }

    /// Coordinates of `e_i e_j`.
    pub fn product(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim + j]
    }

    pub fn set_polar(&mut self, p: Matrix) {
        assert!(p.nrows() == self.dim && p.ncols() == self.dim, "polar size");
        self.polar = Some(p);
    }

    pub fn polar(&self) -> Option<&Matrix> {
        self.polar.as_ref()
    }

    pub fn has_form(&self) -> bool {
        self.polar.is_some()
    }

    pub fn polar_or_err(&self) -> Result<&Matrix> {
        self.polar.as_ref().ok_or(ForgeError::MissingForm)
    }

    /// Nonzero products in row-major order.
    pub fn nonzero_products(&self) -> impl Iterator<Item = (usize, usize, &SparseVec)> {
        self.table.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(move |(k, v)| (k / self.dim, k % self.dim, v))
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc = DenseAcc::new(self.dim);
        self.mul_with(x, y, &mut acc)
    }

    pub fn mul_with(&self, x: &SparseVec, y: &SparseVec, acc: &mut DenseAcc) -> SparseVec {
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let p = &self.table[i * self.dim + j];
                if !p.is_zero() {
                    acc.add_vec(p, &(a * b));
                }
            }
        }
        acc.take()
    }

    /// `n(x, y)`; panics without a polar form.
    pub fn polar_vec(&self, x: &SparseVec, y: &SparseVec) -> Scalar {
        let p = self.polar.as_ref().expect("polar form");
        let mut s = Scalar::zero();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let c = &p[(i, j)];
                if !c.is_zero() {
                    s.add_mul(&(a * b), c);
                }
            }
        }
        s
    }

    /// `n(x) = ½ n(x, x)`.
    pub fn norm_vec(&self, x: &SparseVec) -> Scalar {
        &self.polar_vec(x, x) * &Scalar::frac(1, 2)
    }

    /// Left multiplication `l_x : z ↦ x z`.
    pub fn left_mult(&self, x: &SparseVec) -> SparseMatrix {
        let mut acc = DenseAcc::new(self.dim);
        SparseMatrix::from_cols(
            self.dim,
            (0..self.dim).map(|j| self.mul_with(x, &SparseVec::unit(j), &mut acc)).collect(),
        )
    }

    /// Right multiplication `r_x : z ↦ z x`.
    pub fn right_mult(&self, x: &SparseVec) -> SparseMatrix {
        let mut acc = DenseAcc::new(self.dim);
        SparseMatrix::from_cols(
            self.dim,
            (0..self.dim).map(|j| self.mul_with(&SparseVec::unit(j), x, &mut acc)).collect(),
        )
    }

    pub fn element(&self, coords: SparseVec) -> Element {
        assert!(coords.max_index().is_none_or(|m| m < self.dim));
        Element { dim: self.dim, coords }
    }

    pub fn basis_element(&self, i: usize) -> Element {
        self.element(SparseVec::unit(i))
    }

    /// Bilinear product of elements; both must live in this algebra.
    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        if a.dim != self.dim || b.dim != self.dim {
            return Err(ForgeError::MixedAlgebras);
        }
        Ok(self.element(self.mul(&a.coords, &b.coords)))
    }

    pub fn polar_form(&self, a: &Element, b: &Element) -> Result<Scalar> {
        if a.dim != self.dim || b.dim != self.dim {
            return Err(ForgeError::MixedAlgebras);
        }
        self.polar_or_err()?;
        Ok(self.polar_vec(&a.coords, &b.coords))
    }

    pub fn norm(&self, a: &Element) -> Result<Scalar> {
        Ok(&self.polar_form(a, a)? * &Scalar::frac(1, 2))
    }

    /// Transport structure along a change of basis: new basis vector `k` is `basis[k]`
    /// in old coordinates. The span must be closed under the product.
    pub fn restrict(&self, basis: &[SparseVec], name: &str) -> Result<Algebra> {
        let coord = crate::linalg::Coordinatizer::from_basis(self.dim, basis);
        let m = basis.len();
        let mut out = Algebra::new(m, name);
        let mut acc = DenseAcc::new(self.dim);
        for i in 0..m {
            for j in 0..m {
                let p = self.mul_with(&basis[i], &basis[j], &mut acc);
                let c = coord
                    .coords(&p)
                    .ok_or_else(|| ForgeError::IncompatibleInputs("span not closed under product".into()))?;
                out.set_product(i, j, c);
            }
        }
        if self.polar.is_some() {
            let mut p = Matrix::zero(m, m);
            for i in 0..m {
                for j in 0..m {
                    p[(i, j)] = self.polar_vec(&basis[i], &basis[j]);
                }
            }
            out.set_polar(p);
        }
        Ok(out)
    }
}

/// Element of an algebra, tagged with the dimension of its parent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    dim: usize,
    coords: SparseVec,
}

impl Element {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coords(&self) -> &SparseVec {
        &self.coords
    }

    pub fn dense(&self) -> Vec<Scalar> {
        self.coords.to_dense(self.dim)
    }
}
