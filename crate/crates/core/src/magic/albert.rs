use std::sync::Arc;

use crate::algebra::{derivation_algebra, is_derivation, verify_symmetric, Algebra};
use crate::compose::{s1, AlgebraMorphism};
use crate::error::{ForgeError, Result};
use crate::exact::Scalar;
use crate::linalg::{Coordinatizer, DenseAcc, Echelon, SparseMatrix, SparseVec};
use crate::magic::lie::matrix_lie_algebra;
use crate::magic::{magic_g, MagicAlgebra};
use crate::report::Report;

/// A(S) = k³ ⊕ ι_0(S) ⊕ ι_1(S) ⊕ ι_2(S): `e_i` at `i`, `ι_i(e_a)` at `3 + i·n + a`.
#[derive(Clone, Debug)]
pub struct AlbertAlgebra {
    pub jordan: Arc<Algebra>,
    pub s: Arc<Algebra>,
    /// Cycles `e_i` and `ι_i`.
    pub theta: SparseMatrix,
}

impl AlbertAlgebra {
    pub fn iota(&self, i: usize, a: usize) -> usize {
        3 + i * self.s.dim() + a
    }

    /// ι_i(x) for arbitrary coordinates of S.
    pub fn iota_vec(&self, i: usize, x: &SparseVec) -> SparseVec {
        x.shift(3 + i * self.s.dim())
    }
}

pub fn albert(s: &Algebra) -> Result<AlbertAlgebra> {
    if !s.has_form() || !verify_symmetric(s)?.passed {
        return Err(ForgeError::NotSymmetricComposition);
    }
    let n = s.dim();
    let p = s.polar_or_err()?;
    let dim = 3 + 3 * n;
    let io = |i: usize, a: usize| 3 + (i % 3) * n + a;
    let mut j = Algebra::new(dim, &format!("A({})", s.name()));
    let half = Scalar::frac(1, 2);
    for i in 0..3 {
        j.set_product(i, i, SparseVec::unit(i));
        // (α)∘ι_i(a) = ½(α_{i+1} + α_{i+2})ι_i(a)
        for a in 0..n {
            for e in [(i + 1) % 3, (i + 2) % 3] {
                j.set_product(e, io(i, a), SparseVec::single(io(i, a), half.clone()));
                j.set_product(io(i, a), e, SparseVec::single(io(i, a), half.clone()));
            }
        }
        for a in 0..n {
            for b in 0..n {
                // ι_i(a)∘ι_{i+1}(b) = ι_{i+2}(a*b), and its mirror
                let v = s.product(a, b).shift(io(i + 2, 0));
                j.set_product(io(i, a), io(i + 1, b), v.clone());
                j.set_product(io(i + 1, b), io(i, a), v);
                // ι_i(a)∘ι_i(b) = 2n(a,b)(e_{i+1} + e_{i+2})
                let c = &p[(a, b)] * &Scalar::int(2);
                let v = SparseVec::from_pairs(vec![(((i + 1) % 3) as u32, c.clone()), (((i + 2) % 3) as u32, c)]);
                j.set_product(io(i, a), io(i, b), v);
            }
        }
    }
    let mut cols: Vec<SparseVec> = (0..3).map(|i| SparseVec::unit((i + 1) % 3)).collect();
    for i in 0..3 {
        for a in 0..n {
            cols.push(SparseVec::unit(io(i + 1, a)));
        }
    }
    Ok(AlbertAlgebra { jordan: Arc::new(j), s: Arc::new(s.clone()), theta: SparseMatrix::from_cols(dim, cols) })
}

/// `D_i(a) = 2[L_{ι_i(a)}, L_{e_{i+1}}]`.
pub fn d_i_derivation(j: &AlbertAlgebra, i: usize, a: &SparseVec) -> Result<SparseMatrix> {
    if i > 2 {
        return Err(ForgeError::BadParams(format!("index {} is not in 0..3", i)));
    }
    let l = &j.jordan;
    let la = l.left_mult(&j.iota_vec(i, a));
    let le = l.left_mult(&SparseVec::unit((i + 1) % 3));
    Ok(la.commutator(&le).scale(&Scalar::int(2)))
}

/// The six action rules of D_i(a) on every basis `a`, `b`, and Leibniz for each D_i(e_a).
pub fn verify_d_rules(j: &AlbertAlgebra) -> Result<Report> {
    let s = &j.s;
    let n = s.dim();
    let half = Scalar::frac(1, 2);
    let mut checked = 0u64;
    for i in 0..3 {
        let (i1, i2) = ((i + 1) % 3, (i + 2) % 3);
        for a in 0..n {
            let ea = SparseVec::unit(a);
            let d = d_i_derivation(j, i, &ea)?;
            if !is_derivation(&j.jordan, &d) {
                return Ok(Report::fail("d-rules", vec![i, a], "D_i(a) is not a derivation"));
            }
            let ia = j.iota_vec(i, &ea);
            let fail = |rule: &str, b: usize| Ok(Report::fail("d-rules", vec![i, a, b], format!("rule {} fails", rule)));
            if !d.cols[i].is_zero() {
                return fail("e_i ↦ 0", 0);
            }
            if d.cols[i1] != ia.scale(&half) {
                return fail("e_{i+1} ↦ ½ι_i(a)", 0);
            }
            if d.cols[i2] != ia.scale(&-&half) {
                return fail("e_{i+2} ↦ −½ι_i(a)", 0);
            }
            for b in 0..n {
                let eb = SparseVec::unit(b);
                checked += 1;
                if d.cols[j.iota(i1, b)] != j.iota_vec(i2, s.product(a, b)).neg() {
                    return fail("ι_{i+1}(b) ↦ −ι_{i+2}(a*b)", b);
                }
                if d.cols[j.iota(i2, b)] != j.iota_vec(i1, s.product(b, a)) {
                    return fail("ι_{i+2}(b) ↦ ι_{i+1}(b*a)", b);
                }
                let c = &s.polar_vec(&ea, &eb) * &Scalar::int(2);
                let want = SparseVec::from_pairs(vec![(i1 as u32, -&c), (i2 as u32, c)]);
                if d.cols[j.iota(i, b)] != want {
                    return fail("ι_i(b) ↦ 2n(a,b)(−e_{i+1} + e_{i+2})", b);
                }
            }
        }
    }
    Ok(Report::pass("d-rules").with("pairs", checked))
}

/// Φ: g(k,S) → Der A(S) with its verification.
#[derive(Clone, Debug)]
pub struct PhiIso {
    pub g: MagicAlgebra,
    pub albert: AlbertAlgebra,
    /// Der A(S) on the basis `derivations`.
    pub der: Algebra,
    pub derivations: Vec<SparseMatrix>,
    /// Φ in the bases of g(k,S) and `derivations`.
    pub map: AlgebraMorphism,
    pub report: Report,
}

/// `D_d(e_i) = 0`, `D_d(ι_i(a)) = ι_i(d_i(a))` on the tri part and `ι_i(1⊗a) ↦ D_i(a)`.
pub fn phi_iso(s: &Algebra) -> Result<PhiIso> {
    let g = magic_g(&s1(), s)?;
    let j = albert(s)?;
    let n = s.dim();
    let dim_a = j.jordan.dim();
    let mut images: Vec<SparseMatrix> = Vec::with_capacity(g.dim());
    for d in &g.right.basis {
        let parts = d.parts();
        let mut cols = vec![SparseVec::new(); dim_a];
        for i in 0..3 {
            for a in 0..n {
                cols[j.iota(i, a)] = j.iota_vec(i, &parts[i].cols[a]);
            }
        }
        images.push(SparseMatrix::from_cols(dim_a, cols));
    }
    for i in 0..3 {
        for a in 0..n {
            images.push(d_i_derivation(&j, i, &SparseVec::unit(a))?);
        }
    }
    let derivations = derivation_algebra(&j.jordan);
    let der = matrix_lie_algebra(&derivations, &format!("Der {}", j.jordan.name()))?;
    let coord = Coordinatizer::from_basis(dim_a * dim_a, &derivations.iter().map(SparseMatrix::flatten).collect::<Vec<_>>());
    let report = check_phi(&g, &j, &images, &coord, derivations.len());
    let cols = images
        .iter()
        .map(|m| coord.coords(&m.flatten()).unwrap_or_default())
        .collect();
    let map = AlgebraMorphism {
        source: g.lie.name().to_string(),
        target: der.name().to_string(),
        matrix: SparseMatrix::from_cols(derivations.len(), cols),
    };
    Ok(PhiIso { g, albert: j, der, derivations, map, report })
}

fn check_phi(g: &MagicAlgebra, j: &AlbertAlgebra, images: &[SparseMatrix], coord: &Coordinatizer, der_dim: usize) -> Report {
    let dim_a = j.jordan.dim();
    for (k, m) in images.iter().enumerate() {
        if !is_derivation(&j.jordan, m) {
            return Report::fail("phi", vec![k], "image is not a derivation");
        }
    }
    let mut e = Echelon::new(dim_a * dim_a);
    let mut acc = DenseAcc::new(dim_a * dim_a);
    for m in images {
        e.insert_with(&m.flatten(), &mut acc);
    }
    if e.rank() != g.dim() || der_dim != g.dim() {
        return Report::fail("phi", vec![e.rank(), g.dim(), der_dim], "Φ is not bijective onto Der A");
    }
    for p in 0..g.dim() {
        for q in p + 1..g.dim() {
            let mut lhs = SparseMatrix::zero(dim_a, dim_a);
            for (r, c) in g.lie.product(p, q).iter() {
                lhs = lhs.add_scaled(&images[r], c);
            }
            if lhs != images[p].commutator(&images[q]) {
                return Report::fail("phi", vec![p, q], "Φ([u,v]) ≠ [Φ(u),Φ(v)]");
            }
        }
    }
    // the tri part preserves k³ and each ι_i(S)
    let n = j.s.dim();
    let block = |r: usize| if r < 3 { 0 } else { 1 + (r - 3) / n };
    for (k, m) in images.iter().take(g.right.dim()).enumerate() {
        for (c, col) in m.cols.iter().enumerate() {
            if col.iter().any(|(r, _)| block(r) != block(c)) {
                return Report::fail("phi", vec![k, c], "tri image is not of degree (0,0)");
            }
        }
    }
    debug_assert!(images.iter().all(|m| coord.contains(&m.flatten())));
    Report::pass("phi").with("dim", g.dim()).with("der_dim", der_dim)
}
