use crate::exact::Scalar;

/// Sparse vector: sorted `(index, value)` pairs with no stored zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct SparseVec {
    entries: Vec<(u32, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    /// Build from unsorted pairs; duplicates are summed, zeros dropped.
    pub fn from_pairs(mut pairs: Vec<(u32, Scalar)>) -> Self {
        pairs.sort_by_key(|p| p.0);
        let mut out: Vec<(u32, Scalar)> = Vec::with_capacity(pairs.len());
        for (i, v) in pairs {
            match out.last_mut() {
                Some(last) if last.0 == i => last.1 += &v,
                _ => out.push((i, v)),
            }
        }
        out.retain(|p| !p.1.is_zero());
        SparseVec { entries: out }
    }

    /// Caller guarantees sorted, distinct, nonzero entries.
    pub fn from_sorted(entries: Vec<(u32, Scalar)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|p| !p.1.is_zero()));
        SparseVec { entries }
    }

    pub fn unit(i: usize) -> Self {
        SparseVec { entries: vec![(i as u32, Scalar::one())] }
    }

    pub fn single(i: usize, v: Scalar) -> Self {
        if v.is_zero() {
            SparseVec::new()
        } else {
            SparseVec { entries: vec![(i as u32, v)] }
        }
    }

    pub fn from_dense(v: &[Scalar]) -> Self {
        SparseVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i as u32, x.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, n: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); n];
        for (i, x) in &self.entries {
            v[*i as usize] = x.clone();
        }
        v
    }

    pub fn entries(&self) -> &[(u32, Scalar)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(u32, Scalar)> {
        self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries.iter().map(|(i, x)| (*i as usize, x))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn first(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, x)| (*i as usize, x))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|p| p.0 as usize)
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.entries.binary_search_by_key(&(i as u32), |p| p.0) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn get_ref(&self, i: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&(i as u32), |p| p.0)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        if c.is_one() {
            return self.clone();
        }
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect() }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, -x)).collect() }
    }

    /// `self + c·other`
    pub fn add_scaled(&self, other: &SparseVec, c: &Scalar) -> SparseVec {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (a, b) = (&self.entries, &other.entries);
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i >= a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, &b[j].1 * c));
                j += 1;
            } else {
                let v = &a[i].1 + &(&b[j].1 * c);
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(other, &Scalar::one())
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(other, &Scalar::int(-1))
    }

    pub fn dot(&self, other: &SparseVec) -> Scalar {
        let mut acc = Scalar::zero();
        let (a, b) = (&self.entries, &other.entries);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc.add_mul(&a[i].1, &b[j].1);
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }

    /// Reindex every entry through `f` (which must be injective and order preserving
    /// is not required; the result is re-sorted).
    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec::from_pairs(self.entries.iter().map(|(i, x)| (f(*i as usize) as u32, x.clone())).collect())
    }

    /// Keep only indices in `[lo, hi)`, shifted down by `lo`.
    pub fn slice(&self, lo: usize, hi: usize) -> SparseVec {
        SparseVec {
            entries: self
                .entries
                .iter()
                .filter(|(i, _)| (*i as usize) >= lo && (*i as usize) < hi)
                .map(|(i, x)| (*i - lo as u32, x.clone()))
                .collect(),
        }
    }

    /// Shift every index up by `off`.
    pub fn shift(&self, off: usize) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i + off as u32, x.clone())).collect() }
    }

    /// Append `other` shifted by `off`; all of `other`'s indices must land past ours.
    pub fn concat(&self, other: &SparseVec, off: usize) -> SparseVec {
        let mut e = self.entries.clone();
        debug_assert!(e.last().is_none_or(|l| (l.0 as usize) < off));
        e.extend(other.entries.iter().map(|(i, x)| (*i + off as u32, x.clone())));
        SparseVec { entries: e }
    }
}

/// Dense scratch accumulator with a touched list, for summing many sparse rows.
pub struct DenseAcc {
    vals: Vec<Scalar>,
    mark: Vec<bool>,
    touched: Vec<u32>,
}

impl DenseAcc {
    pub fn new(n: usize) -> Self {
        DenseAcc { vals: vec![Scalar::zero(); n], mark: vec![false; n], touched: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.vals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vals.is_empty()
    }

    #[inline]
    pub fn add(&mut self, i: usize, v: &Scalar) {
        if !self.mark[i] {
            self.mark[i] = true;
            self.touched.push(i as u32);
        }
        self.vals[i] += v;
    }

    #[inline]
    pub fn add_mul(&mut self, i: usize, c: &Scalar, v: &Scalar) {
        if c.is_zero() || v.is_zero() {
            return;
        }
        let p = c * v;
        self.add(i, &p);
    }

    pub fn add_vec(&mut self, v: &SparseVec, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        if c.is_one() {
            for (i, x) in v.entries() {
                self.add(*i as usize, x);
            }
        } else {
            for (i, x) in v.entries() {
                let p = x * c;
                self.add(*i as usize, &p);
            }
        }
    }

    /// Extract the accumulated vector and reset the scratch space.
    pub fn take(&mut self) -> SparseVec {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            let v = std::mem::take(&mut self.vals[i as usize]);
            self.mark[i as usize] = false;
            if !v.is_zero() {
                out.push((i, v));
            }
        }
        self.touched.clear();
        SparseVec::from_sorted(out)
    }

    /// True if nothing nonzero has accumulated; resets either way.
    pub fn take_is_zero(&mut self) -> Option<(usize, Scalar)> {
        let mut witness = None;
        self.touched.sort_unstable();
        for &i in &self.touched {
            let v = std::mem::take(&mut self.vals[i as usize]);
            self.mark[i as usize] = false;
            if witness.is_none() && !v.is_zero() {
                witness = Some((i as usize, v));
            }
        }
        self.touched.clear();
        witness
    }
}

/// Column-major sparse matrix: column `j` is the image of the `j`-th basis vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, ncols: usize) -> Self {
        SparseMatrix { rows, cols: vec![SparseVec::new(); ncols] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { rows: n, cols: (0..n).map(SparseVec::unit).collect() }
    }

    pub fn from_cols(rows: usize, cols: Vec<SparseVec>) -> Self {
        SparseMatrix { rows, cols }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.cols[c].get(r)
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc = DenseAcc::new(self.rows);
        for (j, x) in v.iter() {
            acc.add_vec(&self.cols[j], x);
        }
        acc.take()
    }

    pub fn apply_with(&self, v: &SparseVec, acc: &mut DenseAcc) -> SparseVec {
        for (j, x) in v.iter() {
            acc.add_vec(&self.cols[j], x);
        }
        acc.take()
    }

    /// `self · other`
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut acc = DenseAcc::new(self.rows);
        SparseMatrix {
            rows: self.rows,
            cols: other.cols.iter().map(|c| self.apply_with(c, &mut acc)).collect(),
        }
    }

    pub fn add_scaled(&self, other: &SparseMatrix, c: &Scalar) -> SparseMatrix {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.add_scaled(b, c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> SparseMatrix {
        SparseMatrix { rows: self.rows, cols: self.cols.iter().map(|a| a.scale(c)).collect() }
    }

    /// `[self, other] = self·other − other·self`
    pub fn commutator(&self, other: &SparseMatrix) -> SparseMatrix {
        self.mul(other).add_scaled(&other.mul(self), &Scalar::int(-1))
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut rows: Vec<Vec<(u32, Scalar)>> = vec![Vec::new(); self.rows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c.iter() {
                rows[i].push((j as u32, x.clone()));
            }
        }
        SparseMatrix {
            rows: self.cols.len(),
            cols: rows.into_iter().map(SparseVec::from_sorted).collect(),
        }
    }

    /// Row-major flattening `r·ncols + c`, used to coordinatize matrices as vectors.
    pub fn flatten(&self) -> SparseVec {
        let n = self.cols.len();
        let mut pairs = Vec::new();
        for (c, col) in self.cols.iter().enumerate() {
            for (r, x) in col.iter() {
                pairs.push(((r * n + c) as u32, x.clone()));
            }
        }
        SparseVec::from_pairs(pairs)
    }

    pub fn unflatten(v: &SparseVec, rows: usize, ncols: usize) -> SparseMatrix {
        let mut cols: Vec<Vec<(u32, Scalar)>> = vec![Vec::new(); ncols];
        for (k, x) in v.iter() {
            cols[k % ncols].push(((k / ncols) as u32, x.clone()));
        }
        SparseMatrix { rows, cols: cols.into_iter().map(SparseVec::from_pairs).collect() }
    }
}
