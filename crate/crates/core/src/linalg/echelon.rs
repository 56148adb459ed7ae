use crate::exact::Scalar;
use crate::linalg::sparse::{DenseAcc, SparseVec};

/// Incrementally maintained reduced row echelon form.
///
/// Every stored row has a leading 1 at its pivot and zeros at all other
/// pivot columns, so reducing a vector only needs the vector's own entries.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
    pivot_row: Vec<u32>,
}

const NONE: u32 = u32::MAX;

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), pivots: Vec::new(), pivot_row: vec![NONE; ncols] }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.pivot_row[c] != NONE
    }

    /// Remainder of `v` modulo the row space; zero exactly when `v` is in the span.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut acc = DenseAcc::new(self.ncols);
        self.reduce_with(v, &mut acc)
    }

    pub fn reduce_with(&self, v: &SparseVec, acc: &mut DenseAcc) -> SparseVec {
        if !v.iter().any(|(c, _)| self.pivot_row[c] != NONE) {
            return v.clone();
        }
        acc.add_vec(v, &Scalar::one());
        for (c, x) in v.iter() {
            let r = self.pivot_row[c];
            if r != NONE {
                acc.add_vec(&self.rows[r as usize], &-x);
            }
        }
        acc.take()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adjoin `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        self.insert_reduced(r)
    }

    pub fn insert_with(&mut self, v: &SparseVec, acc: &mut DenseAcc) -> bool {
        let r = self.reduce_with(v, acc);
        self.insert_reduced(r)
    }

    fn insert_reduced(&mut self, r: SparseVec) -> bool {
        let Some((p, lead)) = r.first() else {
            return false;
        };
        let r = r.scale(&lead.inv().expect("nonzero lead"));
        for row in self.rows.iter_mut() {
            if let Some(c) = row.get_ref(p) {
                let c = -c;
                *row = row.add_scaled(&r, &c);
            }
        }
        self.pivot_row[p] = self.rows.len() as u32;
        self.rows.push(r);
        self.pivots.push(p);
        true
    }

    /// Rows ordered by pivot column.
    pub fn sorted_rows(&self) -> Vec<SparseVec> {
        let mut idx: Vec<usize> = (0..self.rows.len()).collect();
        idx.sort_by_key(|&i| self.pivots[i]);
        idx.into_iter().map(|i| self.rows[i].clone()).collect()
    }

    /// Basis of `{x : row·x = 0 for every row}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<SparseVec> {
        // column view of the non-pivot entries of each row
        let mut by_col: Vec<Vec<(u32, Scalar)>> = vec![Vec::new(); self.ncols];
        for (ri, row) in self.rows.iter().enumerate() {
            let p = self.pivots[ri];
            for (c, x) in row.iter() {
                if c != p {
                    by_col[c].push((p as u32, -x));
                }
            }
        }
        let mut out = Vec::new();
        for (f, col) in by_col.into_iter().enumerate() {
            if self.pivot_row[f] != NONE {
                continue;
            }
            let mut e = col;
            e.push((f as u32, Scalar::one()));
            out.push(SparseVec::from_pairs(e));
        }
        out
    }
}

/// Expresses vectors in terms of a growing list of independent vectors.
#[derive(Clone, Debug)]
pub struct Coordinatizer {
    n: usize,
    cap: usize,
    ech: Echelon,
    basis: Vec<SparseVec>,
}

impl Coordinatizer {
    /// Ambient dimension `n`; at most `cap` basis vectors.
    pub fn new(n: usize, cap: usize) -> Self {
        Coordinatizer { n, cap, ech: Echelon::new(n + cap), basis: Vec::new() }
    }

    pub fn from_basis(n: usize, basis: &[SparseVec]) -> Self {
        let mut c = Coordinatizer::new(n, basis.len());
        for b in basis {
            assert!(c.push(b), "basis vectors must be independent");
        }
        c
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.head_remainder(v).is_zero()
    }

    fn head_remainder(&self, v: &SparseVec) -> SparseVec {
        self.ech.reduce(v).slice(0, self.n)
    }

    /// Adjoin `v` if it is independent of the current basis.
    pub fn push(&mut self, v: &SparseVec) -> bool {
        if self.basis.len() == self.cap || self.contains(v) {
            return false;
        }
        let k = self.basis.len();
        let aug = v.concat(&SparseVec::unit(k), self.n);
        let grew = self.ech.insert(&aug);
        debug_assert!(grew);
        self.basis.push(v.clone());
        true
    }

    /// Coefficients of `v` in the basis, or `None` when `v` is outside the span.
    pub fn coords(&self, v: &SparseVec) -> Option<SparseVec> {
        let r = self.ech.reduce(v);
        let head = r.slice(0, self.n);
        if !head.is_zero() {
            return None;
        }
        Some(r.slice(self.n, self.n + self.cap).neg())
    }

    pub fn coords_with(&self, v: &SparseVec, acc: &mut DenseAcc) -> Option<SparseVec> {
        let r = self.ech.reduce_with(v, acc);
        if r.first().is_some_and(|(i, _)| i < self.n) {
            return None;
        }
        Some(r.slice(self.n, self.n + self.cap).neg())
    }
}
