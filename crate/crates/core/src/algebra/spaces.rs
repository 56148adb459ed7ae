use crate::algebra::Algebra;
use crate::error::Result;
use crate::exact::Scalar;
use crate::linalg::{DenseAcc, Echelon, SparseMatrix, SparseVec};

/// Kernel of a homogeneous system given row by row.
pub fn solve_constraints(ncols: usize, rows: impl IntoIterator<Item = SparseVec>) -> Vec<SparseVec> {
    let mut e = Echelon::new(ncols);
    let mut acc = DenseAcc::new(ncols);
    for r in rows {
        if !r.is_zero() {
            e.insert_with(&r, &mut acc);
        }
        if e.rank() == ncols {
            break;
        }
    }
    e.nullspace()
}

// Unknown d[r][c] (coefficient of e_r in d(e_c)) sits at r·n + c.
fn var(n: usize, r: usize, c: usize) -> u32 {
    (r * n + c) as u32
}

/// Rows of `d(e_a e_b) − d(e_a) e_b − e_a d(e_b) = 0` for one pair `(a, b)`.
fn leibniz_rows(s: &Algebra, a: usize, b: usize) -> Vec<SparseVec> {
    let n = s.dim();
    let mut rows: Vec<Vec<(u32, Scalar)>> = vec![Vec::new(); n];
    for (c, x) in s.product(a, b).iter() {
        for (r, row) in rows.iter_mut().enumerate() {
            row.push((var(n, r, c), x.clone()));
        }
    }
    for k in 0..n {
        for (r, x) in s.product(k, b).iter() {
            rows[r].push((var(n, k, a), -x));
        }
        for (r, x) in s.product(a, k).iter() {
            rows[r].push((var(n, k, b), -x));
        }
    }
    rows.into_iter().map(SparseVec::from_pairs).collect()
}

fn to_matrices(n: usize, vs: Vec<SparseVec>) -> Vec<SparseMatrix> {
    vs.iter().map(|v| SparseMatrix::unflatten(v, n, n)).collect()
}

/// All Leibniz rows over the unknowns `d[r][c]` at `r·n + c`.
pub(crate) fn derivation_rows(s: &Algebra) -> Vec<SparseVec> {
    let n = s.dim();
    (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).flat_map(|(a, b)| leibniz_rows(s, a, b)).collect()
}

/// Basis of Der A.
pub fn derivation_algebra(s: &Algebra) -> Vec<SparseMatrix> {
    let n = s.dim();
    to_matrices(n, solve_constraints(n * n, derivation_rows(s)))
}

pub fn is_derivation(s: &Algebra, d: &SparseMatrix) -> bool {
    let n = s.dim();
    let mut acc = DenseAcc::new(n);
    for a in 0..n {
        for b in 0..n {
            let lhs = d.apply_with(s.product(a, b), &mut acc);
            let r1 = s.mul_with(&d.cols[a], &SparseVec::unit(b), &mut acc);
            let r2 = s.mul_with(&SparseVec::unit(a), &d.cols[b], &mut acc);
            if lhs != r1.add(&r2) {
                return false;
            }
        }
    }
    true
}

/// Rows of `n(d e_a, e_b) + n(e_a, d e_b) = 0`, for `a ≤ b`.
pub(crate) fn skew_rows(s: &Algebra, offset: usize) -> Result<Vec<SparseVec>> {
    let p = s.polar_or_err()?;
    let n = s.dim();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a..n {
            let mut row = Vec::new();
            for r in 0..n {
                if !p[(r, b)].is_zero() {
                    row.push((var(n, r, a) + offset as u32, p[(r, b)].clone()));
                }
                if !p[(a, r)].is_zero() {
                    row.push((var(n, r, b) + offset as u32, p[(a, r)].clone()));
                }
            }
            out.push(SparseVec::from_pairs(row));
        }
    }
    Ok(out)
}

/// Basis of o(S, n).
pub fn orthogonal_algebra(s: &Algebra) -> Result<Vec<SparseMatrix>> {
    let n = s.dim();
    Ok(to_matrices(n, solve_constraints(n * n, skew_rows(s, 0)?)))
}

/// Basis of the subalgebra generated by `gens`.
pub fn subalgebra_generated(s: &Algebra, gens: &[SparseVec]) -> Vec<SparseVec> {
    let n = s.dim();
    let mut e = Echelon::new(n);
    let mut basis: Vec<SparseVec> = Vec::new();
    let mut acc = DenseAcc::new(n);
    for g in gens {
        if e.insert_with(g, &mut acc) {
            basis.push(g.clone());
        }
    }
    let mut done = 0;
    while done < basis.len() {
        let v = basis[done].clone();
        done += 1;
        let mut k = 0;
        while k < done {
            let w = basis[k].clone();
            for p in [s.mul_with(&v, &w, &mut acc), s.mul_with(&w, &v, &mut acc)] {
                if e.insert_with(&p, &mut acc) {
                    basis.push(p);
                }
            }
            k += 1;
        }
    }
    basis
}

/// Basis of `{x : x e_j = e_j x for all j}`.
pub fn commutative_center(s: &Algebra) -> Vec<SparseVec> {
    let n = s.dim();
    let mut rows = Vec::new();
    for j in 0..n {
        let mut r: Vec<Vec<(u32, Scalar)>> = vec![Vec::new(); n];
        for c in 0..n {
            for (k, x) in s.product(c, j).iter() {
                r[k].push((c as u32, x.clone()));
            }
            for (k, x) in s.product(j, c).iter() {
                r[k].push((c as u32, -x));
            }
        }
        rows.extend(r.into_iter().map(SparseVec::from_pairs));
    }
    solve_constraints(n, rows)
}
