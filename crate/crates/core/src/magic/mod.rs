//! Triality, the magic-square Lie algebras g(S,S′), the Albert algebra and
//! gradings induced on them.

mod albert;
mod induced;
mod lie;
mod tri;

use std::sync::Arc;

use crate::algebra::{verify_symmetric, Algebra, JacobiPolicy};
use crate::error::{ForgeError, Result};
use crate::exact::Scalar;
use crate::grading::{AbelianGroup, Grading};
use crate::linalg::{DenseAcc, Echelon, SparseMatrix, SparseVec};
use crate::report::Report;

pub use albert::{albert, d_i_derivation, phi_iso, verify_d_rules, AlbertAlgebra, PhiIso};
pub use induced::{induced_grading, refine_by_order3, Target};
pub use lie::{
    ad, is_cartan, is_toral, jordan_grading_check, killing_form, matrix_lie_algebra, toral_operator, verify_toral_operator, JordanKind,
};
pub use tri::{sigma, t_xy, theta, tri, tri_graded, verify_triality, TriElement, Triality};

/// g(S,S′) = tri(S) ⊕ tri(S′) ⊕ ι_0(S⊗S′) ⊕ ι_1(S⊗S′) ⊕ ι_2(S⊗S′).
///
/// Basis: tri(S), tri(S′), then each ι_i in row-major tensor order (S index major).
#[derive(Clone, Debug)]
pub struct MagicAlgebra {
    pub lie: Arc<Algebra>,
    pub left: Triality,
    pub right: Triality,
    /// ι_0, ι_1, ι_2 in degrees (1,0), (0,1), (1,1); tri parts in degree 0.
    pub z2sq: Grading,
}

impl MagicAlgebra {
    pub fn dim(&self) -> usize {
        self.lie.dim()
    }

    /// Number of tri-part basis vectors, which come first.
    pub fn tri_dim(&self) -> usize {
        self.left.dim() + self.right.dim()
    }

    /// Index of ι_i(e_a ⊗ e′_b).
    pub fn iota(&self, i: usize, a: usize, b: usize) -> usize {
        let m = self.right.algebra.dim();
        self.tri_dim() + (i * self.left.algebra.dim() + a) * m + b
    }

    /// ι_i(x ⊗ x′) for arbitrary coordinates.
    pub fn iota_tensor(&self, i: usize, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut pairs = Vec::new();
        for (a, p) in x.iter() {
            for (b, q) in y.iter() {
                pairs.push((self.iota(i, a, b) as u32, p * q));
            }
        }
        SparseVec::from_pairs(pairs)
    }

    /// Jacobi policy: exhaustive up to dimension 199, otherwise every triple
    /// touching a tri part plus a million sampled triples.
    pub fn jacobi_policy(&self, full: bool, seed: u64) -> JacobiPolicy {
        if full {
            JacobiPolicy::Full
        } else {
            JacobiPolicy::default_for(self.dim(), self.tri_dim(), seed)
        }
    }
}

fn check_input(s: &Algebra) -> Result<()> {
    if ![1, 2, 8].contains(&s.dim()) {
        return Err(ForgeError::BadDimensions(format!("symmetric composition algebras of dimension {} are not supported", s.dim())));
    }
    if !verify_symmetric(s)?.passed {
        return Err(ForgeError::NotSymmetricComposition);
    }
    Ok(())
}

pub fn magic_g(s: &Algebra, s2: &Algebra) -> Result<MagicAlgebra> {
    check_input(s)?;
    check_input(s2)?;
    build(tri(s)?, tri(s2)?)
}

/// g(S,S′) with tri bases homogeneous for the given gradings of S and S′.
pub fn magic_g_graded(gs: &Grading, gs2: &Grading) -> Result<MagicAlgebra> {
    check_input(&gs.algebra)?;
    check_input(&gs2.algebra)?;
    build(tri_graded(gs)?, tri_graded(gs2)?)
}

/// Coordinates of θ^i(t_{e_a,e_c}) for all i, a, c, indexed `(i·n + a)·n + c`.
fn theta_t_coords(tr: &Triality) -> Result<Vec<SparseVec>> {
    let s = &tr.algebra;
    let n = s.dim();
    let mut out = vec![SparseVec::new(); 3 * n * n];
    for a in 0..n {
        for c in 0..n {
            let mut t = tri::t_vec(s, &SparseVec::unit(a), &SparseVec::unit(c));
            for i in 0..3 {
                out[(i * n + a) * n + c] = tr
                    .coords(&t)
                    .ok_or_else(|| ForgeError::IncompatibleInputs(format!("t_(e{},e{}) is not in tri", a, c)))?;
                t = theta(&t);
            }
        }
    }
    Ok(out)
}

fn tri_brackets(g: &mut Algebra, tr: &Triality, off: usize) {
    for p in 0..tr.dim() {
        for q in p + 1..tr.dim() {
            let c = tr.coords(&tr.basis[p].bracket(&tr.basis[q])).expect("tri is a subalgebra").shift(off);
            g.set_product(q + off, p + off, c.neg());
            g.set_product(p + off, q + off, c);
        }
    }
}

fn build(left: Triality, right: Triality) -> Result<MagicAlgebra> {
    let s = left.algebra.clone();
    let s2 = right.algebra.clone();
    let (n, m) = (s.dim(), s2.dim());
    let (tl, tr) = (left.dim(), right.dim());
    let base = tl + tr;
    let dim = base + 3 * n * m;
    let iota = |i: usize, a: usize, b: usize| base + (i * n + a) * m + b;
    let mut g = Algebra::new(dim, &format!("g({}, {})", s.name(), s2.name()));

    tri_brackets(&mut g, &left, 0);
    tri_brackets(&mut g, &right, tl);

    // [d, ι_i(x⊗x′)] = ι_i(d_i(x)⊗x′) and [d′, ι_i(x⊗x′)] = ι_i(x⊗d′_i(x′))
    for (p, d) in left.basis.iter().enumerate() {
        let parts = d.parts();
        for i in 0..3 {
            for a in 0..n {
                for b in 0..m {
                    let v = SparseVec::from_pairs(
                        parts[i].cols[a].iter().map(|(r, x)| (iota(i, r, b) as u32, x.clone())).collect(),
                    );
                    g.set_product(iota(i, a, b), p, v.neg());
                    g.set_product(p, iota(i, a, b), v);
                }
            }
        }
    }
    for (q, d) in right.basis.iter().enumerate() {
        let parts = d.parts();
        for i in 0..3 {
            for a in 0..n {
                for b in 0..m {
                    let v = SparseVec::from_pairs(
                        parts[i].cols[b].iter().map(|(r, x)| (iota(i, a, r) as u32, x.clone())).collect(),
                    );
                    g.set_product(iota(i, a, b), tl + q, v.neg());
                    g.set_product(tl + q, iota(i, a, b), v);
                }
            }
        }
    }

    // [ι_i(x⊗x′), ι_{i+1}(y⊗y′)] = ι_{i+2}((x*y)⊗(x′⋆y′))
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        for a in 0..n {
            for c in 0..n {
                let xy = s.product(a, c);
                for b in 0..m {
                    for d in 0..m {
                        let xy2 = s2.product(b, d);
                        let mut pairs = Vec::new();
                        for (r, p) in xy.iter() {
                            for (t, q) in xy2.iter() {
                                pairs.push((iota(k, r, t) as u32, p * q));
                            }
                        }
                        let v = SparseVec::from_pairs(pairs);
                        g.set_product(iota(j, c, d), iota(i, a, b), v.neg());
                        g.set_product(iota(i, a, b), iota(j, c, d), v);
                    }
                }
            }
        }
    }

    // [ι_i(x⊗x′), ι_i(y⊗y′)] = n′(x′,y′)θ^i(t_{x,y}) + n(x,y)θ′^i(t′_{x′,y′})
    let lt = theta_t_coords(&left)?;
    let rt = theta_t_coords(&right)?;
    let pn = s.polar_or_err()?;
    let pm = s2.polar_or_err()?;
    for i in 0..3 {
        for a in 0..n {
            for c in 0..n {
                for b in 0..m {
                    for d in 0..m {
                        let v = lt[(i * n + a) * n + c].scale(&pm[(b, d)]);
                        let w = rt[(i * m + b) * m + d].scale(&pn[(a, c)]).shift(tl);
                        g.set_product(iota(i, a, b), iota(i, c, d), v.add(&w));
                    }
                }
            }
        }
    }

    let mut coords = vec![vec![0, 0]; base];
    for i in 0..3 {
        let deg = [vec![1, 0], vec![0, 1], vec![1, 1]][i].clone();
        coords.extend(std::iter::repeat_n(deg, n * m));
    }
    let lie = Arc::new(g);
    let z2sq = Grading::from_coords(lie.clone(), AbelianGroup::cyclic_product(&[2, 2]), &coords)?;
    Ok(MagicAlgebra { lie, left, right, z2sq })
}

/// Θ: θ on each tri part and ι_i ↦ ι_{i+1}.
pub fn big_theta(g: &MagicAlgebra) -> SparseMatrix {
    let tl = g.left.dim();
    let mut cols = Vec::with_capacity(g.dim());
    cols.extend(g.left.theta_matrix().cols);
    cols.extend(g.right.theta_matrix().cols.into_iter().map(|c| c.shift(tl)));
    let (n, m) = (g.left.algebra.dim(), g.right.algebra.dim());
    for i in 0..3 {
        for a in 0..n {
            for b in 0..m {
                cols.push(SparseVec::unit(g.iota((i + 1) % 3, a, b)));
            }
        }
    }
    SparseMatrix::from_cols(g.dim(), cols)
}

/// Multiplicativity on all basis pairs and invertibility, by sparse elimination.
pub fn verify_automorphism(l: &Algebra, t: &SparseMatrix) -> Report {
    let n = l.dim();
    if t.rows != n || t.ncols() != n {
        return Report::fail("automorphism", vec![t.rows, t.ncols()], "wrong shape");
    }
    let mut acc = DenseAcc::new(n);
    for i in 0..n {
        for j in 0..n {
            let lhs = t.apply_with(l.product(i, j), &mut acc);
            let rhs = l.mul_with(&t.cols[i], &t.cols[j], &mut acc);
            if lhs != rhs {
                return Report::fail("automorphism", vec![i, j], "not multiplicative");
            }
        }
    }
    let mut e = Echelon::new(n);
    for c in &t.cols {
        e.insert_with(c, &mut acc);
    }
    if e.rank() != n {
        return Report::fail("automorphism", vec![e.rank()], "not invertible");
    }
    Report::pass("automorphism").with("dim", n)
}

/// Dimensions of the eigenspaces of an operator of order dividing 3 for 1, ω, ω².
pub fn order3_eigen_dims(t: &SparseMatrix) -> [usize; 3] {
    let n = t.rows;
    let mut out = [0; 3];
    let mut acc = DenseAcc::new(n);
    for (j, slot) in out.iter_mut().enumerate() {
        let (w2, w) = (Scalar::omega_pow(2 * j as i64), Scalar::omega_pow(j as i64));
        let mut e = Echelon::new(n);
        for k in 0..n {
            let v = SparseVec::unit(k);
            let tv = t.apply_with(&v, &mut acc);
            let ttv = t.apply_with(&tv, &mut acc);
            e.insert_with(&v.add_scaled(&tv, &w2).add_scaled(&ttv, &w), &mut acc);
        }
        *slot = e.rank();
    }
    out
}
