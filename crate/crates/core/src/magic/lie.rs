use std::collections::BTreeSet;

use crate::algebra::{solve_constraints, subalgebra_generated, Algebra};
use crate::compose::okubo;
use crate::error::{ForgeError, Result};
use crate::exact::{Polynomial, Scalar};
use crate::grading::{verify_grading, Grading};
use crate::linalg::{minimal_polynomial, Coordinatizer, DenseAcc, Echelon, Matrix, SparseMatrix, SparseVec};
use crate::magic::tri::{sigma, t_vec};
use crate::report::Report;

/// `ad_x`, column `k` being `[x, e_k]`.
pub fn ad(l: &Algebra, x: &SparseVec) -> SparseMatrix {
    let n = l.dim();
    let mut acc = DenseAcc::new(n);
    let cols = (0..n)
        .map(|k| {
            for (j, c) in x.iter() {
                acc.add_vec(l.product(j, k), c);
            }
            acc.take()
        })
        .collect();
    SparseMatrix::from_cols(n, cols)
}

/// The Lie algebra spanned by independent matrices under the commutator.
pub fn matrix_lie_algebra(mats: &[SparseMatrix], name: &str) -> Result<Algebra> {
    let Some(first) = mats.first() else {
        return Ok(Algebra::new(0, name));
    };
    let size = first.rows * first.ncols();
    let flats: Vec<SparseVec> = mats.iter().map(SparseMatrix::flatten).collect();
    let coord = Coordinatizer::from_basis(size, &flats);
    let k = mats.len();
    let mut l = Algebra::new(k, name);
    for p in 0..k {
        for q in p + 1..k {
            let c = coord
                .coords(&mats[p].commutator(&mats[q]).flatten())
                .ok_or_else(|| ForgeError::IncompatibleInputs("span not closed under the commutator".into()))?;
            l.set_product(q, p, c.neg());
            l.set_product(p, q, c);
        }
    }
    Ok(l)
}

fn bracket(l: &Algebra, x: &SparseVec, y: &SparseVec, acc: &mut DenseAcc) -> SparseVec {
    l.mul_with(x, y, acc)
}

fn first_nonabelian(l: &Algebra, h: &[SparseVec]) -> Option<(usize, usize)> {
    let mut acc = DenseAcc::new(l.dim());
    for i in 0..h.len() {
        for j in i + 1..h.len() {
            if !bracket(l, &h[i], &h[j], &mut acc).is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

/// Abelian, and each spanning element has a squarefree adjoint minimal polynomial.
pub fn is_toral(l: &Algebra, h: &[SparseVec]) -> Report {
    if let Some((i, j)) = first_nonabelian(l, h) {
        return Report::fail("toral", vec![i, j], "spanning elements do not commute");
    }
    let mut polys = Vec::new();
    for (i, x) in h.iter().enumerate() {
        let p = minimal_polynomial(&ad(l, x));
        let sf = p.is_squarefree().expect("minimal polynomial is nonzero");
        polys.push(p.to_string());
        if !sf {
            return Report::fail("toral", vec![i], format!("ad has minimal polynomial {}, not squarefree", p))
                .with("minpolys", polys);
        }
    }
    Report::pass("toral").with("dim", h.len()).with("minpolys", polys)
}

/// Dimension of `{x : [x, h] ⊆ h}`.
fn normalizer_dim(l: &Algebra, h: &[SparseVec]) -> usize {
    let n = l.dim();
    let mut e = Echelon::new(n);
    let mut acc = DenseAcc::new(n);
    for v in h {
        e.insert_with(v, &mut acc);
    }
    // column k lists [e_k, h_i] mod h for every i
    let mut cols = Vec::with_capacity(n);
    for k in 0..n {
        let mut col = SparseVec::new();
        for (i, hi) in h.iter().enumerate() {
            let b = e.reduce_with(&bracket(l, &SparseVec::unit(k), hi, &mut acc), &mut acc);
            col = col.add(&b.shift(i * n));
        }
        cols.push(col);
    }
    let rows = SparseMatrix::from_cols(n * h.len(), cols).transpose().cols;
    solve_constraints(n, rows).len()
}

/// Abelian, toral and self-normalizing.
pub fn is_cartan(l: &Algebra, h: &[SparseVec]) -> Report {
    let t = is_toral(l, h);
    if !t.passed {
        return Report::all("cartan", vec![t]);
    }
    let dim = Coordinatizer::from_basis(l.dim(), h).len();
    let nd = normalizer_dim(l, h);
    let out = Report::all("cartan", vec![t]).with("normalizer_dim", nd);
    if nd != dim {
        return Report::fail("cartan", vec![nd, dim], "not self-normalizing").with("normalizer_dim", nd);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JordanKind {
    /// Zero component trivial, equal dimensions, semisimple elements.
    Plain,
    /// Additionally every component is a Cartan subalgebra.
    Dempwolff,
    /// Additionally every `g_μ ⊕ g_{−μ}` is a Cartan subalgebra.
    PlusMinus,
}

/// A grading with trivial zero component whose other components are equidimensional
/// and consist of semisimple elements.
pub fn jordan_grading_check(gr: &Grading, kind: JordanKind) -> Result<Report> {
    if !verify_grading(gr).passed {
        return Err(ForgeError::Unverified);
    }
    let l = &gr.algebra;
    let comps = gr.components();
    let g = &gr.group;
    if let Some(z) = comps.get(&g.zero()) {
        return Ok(Report::fail("jordan-grading", z.clone(), "zero component is nonzero"));
    }
    let dims: BTreeSet<usize> = comps.values().map(Vec::len).collect();
    if dims.len() > 1 {
        return Ok(Report::fail("jordan-grading", dims.into_iter().collect(), "components of different dimensions"));
    }
    let span = |idx: &[usize]| idx.iter().map(|&i| SparseVec::unit(i)).collect::<Vec<_>>();
    let mut cartan_checked = 0usize;
    for (deg, idx) in &comps {
        let h = span(idx);
        match kind {
            JordanKind::Plain => {
                for (k, x) in h.iter().enumerate() {
                    let p = minimal_polynomial(&ad(l, x));
                    if !p.is_squarefree().expect("nonzero") {
                        return Ok(Report::fail("jordan-grading", vec![idx[k]], format!("ad not semisimple: {}", p)));
                    }
                }
            }
            JordanKind::Dempwolff => {
                let r = is_cartan(l, &h);
                if !r.passed {
                    return Ok(Report::fail("jordan-grading", idx.clone(), format!("component {} not Cartan: {}", deg, r.note)));
                }
                cartan_checked += 1;
            }
            JordanKind::PlusMinus => {
                let neg = g.neg(deg);
                if neg < *deg {
                    continue;
                }
                let mut both = idx.clone();
                if neg != *deg {
                    both.extend(comps.get(&neg).cloned().unwrap_or_default());
                }
                let r = is_cartan(l, &span(&both));
                if !r.passed {
                    return Ok(Report::fail("jordan-grading", both, format!("g_{0} ⊕ g_-{0} not Cartan: {1}", deg, r.note)));
                }
                cartan_checked += 1;
            }
        }
    }
    Ok(Report::pass("jordan-grading")
        .with("components", comps.len())
        .with("component_dim", dims.into_iter().next().unwrap_or(0))
        .with("cartan_checked", cartan_checked))
}

/// `εσ_{x,y} + δ(½n(x,y)1 − r_x l_y) + γ(½n(x,y)1 − l_x r_y)` on O_{α,β}
/// with `x = −x_{1,0}`, `y = −x_{0,1}`.
pub fn toral_operator(alpha: &Scalar, beta: &Scalar, eps: &Scalar, delta: &Scalar, gamma: &Scalar) -> Result<SparseMatrix> {
    if [eps, delta, gamma].iter().any(|c| c.is_zero()) {
        return Err(ForgeError::ZeroParameter);
    }
    let s = okubo(alpha, beta)?;
    let x = SparseVec::single(0, Scalar::int(-1));
    let y = SparseVec::single(2, Scalar::int(-1));
    let t = t_vec(&s, &x, &y);
    debug_assert_eq!(t.part(0), sigma(&s, &x, &y));
    Ok(t.part(0).scale(eps).add_scaled(&t.part(1), delta).add_scaled(&t.part(2), gamma))
}

/// The operator kills `span(y*x, (y*y)*(x*x))` and cycles the other six basis
/// vectors, so its minimal polynomial is `X(X³ + c)(X³ − c)` with `c = εδγαβ`.
/// Checks that, that the restriction to the image has minimal polynomial exactly
/// `(X³ + c)(X³ − c)`, that it is squarefree, and that the kernel is the
/// subalgebra generated by `y*x`.
pub fn verify_toral_operator(alpha: &Scalar, beta: &Scalar, eps: &Scalar, delta: &Scalar, gamma: &Scalar) -> Result<Report> {
    let m = toral_operator(alpha, beta, eps, delta, gamma)?;
    let c = &(&(eps * delta) * &(gamma * alpha)) * beta;
    let mut want = vec![Scalar::zero(); 7];
    want[0] = -&(&c * &c);
    want[6] = Scalar::one();
    let want = Polynomial::new(want);
    let full_want = Polynomial::new([vec![Scalar::zero()], want.coeffs().to_vec()].concat());
    let p = minimal_polynomial(&m);
    // restriction to the invariant subspace im(m)
    let mut e = Echelon::new(8);
    let mut image = Vec::new();
    for col in &m.cols {
        if e.insert(col) {
            image.push(col.clone());
        }
    }
    let coord = Coordinatizer::from_basis(8, &image);
    let restricted = SparseMatrix::from_cols(
        image.len(),
        image.iter().map(|v| coord.coords(&m.apply(v)).expect("image is invariant")).collect(),
    );
    let q = minimal_polynomial(&restricted);
    let sf = p.is_squarefree()?;
    let s = okubo(alpha, beta)?;
    let x = SparseVec::single(0, Scalar::int(-1));
    let y = SparseVec::single(2, Scalar::int(-1));
    let sub = subalgebra_generated(&s, &[s.mul(&y, &x)]);
    let kernel = solve_constraints(8, m.transpose().cols);
    let same_kernel = kernel.len() == sub.len() && {
        let c = Coordinatizer::from_basis(8, &sub);
        kernel.iter().all(|v| c.contains(v))
    };
    let r = Report::pass("toral-operator")
        .with("minpoly", p.to_string())
        .with("minpoly_on_image", q.to_string())
        .with("expected_on_image", want.to_string())
        .with("squarefree", sf)
        .with("kernel_dim", kernel.len())
        .with("subalgebra_dim", sub.len());
    let fail = |r: Report, w: Vec<usize>, note: &str| Report { passed: false, witness: Some(w), note: note.into(), ..r };
    if q != want || p != full_want {
        return Ok(fail(r, vec![image.len()], "unexpected minimal polynomial"));
    }
    if !sf {
        return Ok(fail(r, vec![], "not squarefree"));
    }
    if !same_kernel {
        return Ok(fail(r, vec![kernel.len(), sub.len()], "kernel differs from the subalgebra generated by y*x"));
    }
    Ok(r)
}

/// `κ(e_i, e_j) = tr(ad e_i ad e_j)`.
pub fn killing_form(l: &Algebra) -> Matrix {
    let n = l.dim();
    let ads: Vec<SparseMatrix> = (0..n).map(|i| ad(l, &SparseVec::unit(i))).collect();
    let rows: Vec<SparseMatrix> = ads.iter().map(SparseMatrix::transpose).collect();
    let mut k = Matrix::zero(n, n);
    for i in 0..n {
        for j in i..n {
            // tr(AB) = Σ_c (row c of A)·(column c of B)
            let mut t = Scalar::zero();
            for c in 0..n {
                t += &rows[i].cols[c].dot(&ads[j].cols[c]);
            }
            k[(i, j)] = t.clone();
            k[(j, i)] = t;
        }
    }
    k
}
