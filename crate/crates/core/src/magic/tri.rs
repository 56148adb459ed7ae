use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{orthogonal_algebra, skew_rows, solve_constraints, Algebra, Element};
use crate::error::{ForgeError, Result};
use crate::exact::Scalar;
use crate::grading::{AbelianGroup, GroupElement, Grading};
use crate::linalg::{Coordinatizer, DenseAcc, Echelon, SparseMatrix, SparseVec};
use crate::report::Report;

/// A triple `(d0, d1, d2)` of endomorphisms of an `n`-dimensional space,
/// flattened with `d_k[r][c]` at `k·n² + r·n + c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TriElement {
    n: usize,
    v: SparseVec,
}

impl TriElement {
    pub fn zero(n: usize) -> Self {
        TriElement { n, v: SparseVec::new() }
    }

    pub fn from_flat(n: usize, v: SparseVec) -> Self {
        assert!(v.max_index().is_none_or(|m| m < 3 * n * n));
        TriElement { n, v }
    }

    pub fn from_parts(parts: [&SparseMatrix; 3]) -> Self {
        let n = parts[0].rows;
        let nn = n * n;
        let mut v = SparseVec::new();
        for (k, p) in parts.iter().enumerate() {
            v = v.concat(&p.flatten(), k * nn);
        }
        TriElement { n, v }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn flat(&self) -> &SparseVec {
        &self.v
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    /// The endomorphism `d_k`.
    pub fn part(&self, k: usize) -> SparseMatrix {
        let nn = self.n * self.n;
        SparseMatrix::unflatten(&self.v.slice(k * nn, (k + 1) * nn), self.n, self.n)
    }

    pub fn parts(&self) -> [SparseMatrix; 3] {
        [self.part(0), self.part(1), self.part(2)]
    }

    pub fn add_scaled(&self, other: &TriElement, c: &Scalar) -> TriElement {
        TriElement { n: self.n, v: self.v.add_scaled(&other.v, c) }
    }

    pub fn scale(&self, c: &Scalar) -> TriElement {
        TriElement { n: self.n, v: self.v.scale(c) }
    }

    /// Componentwise commutator.
    pub fn bracket(&self, other: &TriElement) -> TriElement {
        let a = self.parts();
        let b = other.parts();
        let c: Vec<SparseMatrix> = (0..3).map(|k| a[k].commutator(&b[k])).collect();
        TriElement::from_parts([&c[0], &c[1], &c[2]])
    }
}

/// `(d0, d1, d2) ↦ (d2, d0, d1)`.
pub fn theta(t: &TriElement) -> TriElement {
    let nn = t.n * t.n;
    TriElement { n: t.n, v: t.v.map_indices(|i| (i + nn) % (3 * nn)) }
}

/// `σ_{x,y}(z) = n(x,z)y − n(y,z)x`.
pub fn sigma(s: &Algebra, x: &SparseVec, y: &SparseVec) -> SparseMatrix {
    let n = s.dim();
    let cols = (0..n)
        .map(|c| {
            let z = SparseVec::unit(c);
            y.scale(&s.polar_vec(x, &z)).add_scaled(x, &-s.polar_vec(y, &z))
        })
        .collect();
    SparseMatrix::from_cols(n, cols)
}

pub(crate) fn t_vec(s: &Algebra, x: &SparseVec, y: &SparseVec) -> TriElement {
    let n = s.dim();
    let half = &s.polar_vec(x, y) * &Scalar::frac(1, 2);
    let id = SparseMatrix::identity(n).scale(&half);
    let rl = s.right_mult(x).mul(&s.left_mult(y));
    let lr = s.left_mult(x).mul(&s.right_mult(y));
    let m = Scalar::int(-1);
    TriElement::from_parts([&sigma(s, x, y), &id.add_scaled(&rl, &m), &id.add_scaled(&lr, &m)])
}

/// `t_{x,y} = (σ_{x,y}, ½n(x,y)1 − r_x l_y, ½n(x,y)1 − l_x r_y)`.
pub fn t_xy(s: &Algebra, x: &Element, y: &Element) -> Result<TriElement> {
    if x.dim() != s.dim() || y.dim() != s.dim() {
        return Err(ForgeError::MixedAlgebras);
    }
    s.polar_or_err()?;
    Ok(t_vec(s, x.coords(), y.coords()))
}

/// Skew-symmetry of each `d_k` plus `d0(x*y) = d1(x)*y + x*d2(y)` on basis pairs.
fn triality_rows(s: &Algebra) -> Result<Vec<SparseVec>> {
    let n = s.dim();
    let nn = n * n;
    let var = |k: usize, r: usize, c: usize| (k * nn + r * n + c) as u32;
    let mut rows = Vec::new();
    for k in 0..3 {
        rows.extend(skew_rows(s, k * nn)?);
    }
    for a in 0..n {
        for b in 0..n {
            let mut by_m: Vec<Vec<(u32, Scalar)>> = vec![Vec::new(); n];
            for (c, x) in s.product(a, b).iter() {
                for (m, row) in by_m.iter_mut().enumerate() {
                    row.push((var(0, m, c), x.clone()));
                }
            }
            for r in 0..n {
                for (m, x) in s.product(r, b).iter() {
                    by_m[m].push((var(1, r, a), -x));
                }
                for (m, x) in s.product(a, r).iter() {
                    by_m[m].push((var(2, r, b), -x));
                }
            }
            rows.extend(by_m.into_iter().map(SparseVec::from_pairs));
        }
    }
    Ok(rows)
}

/// Kernel of `rows`, solved separately on each class of columns of equal degree.
pub(crate) fn solve_by_degree(rows: &[SparseVec], col_degree: &[GroupElement]) -> Vec<(GroupElement, Vec<SparseVec>)> {
    let mut classes: BTreeMap<&GroupElement, Vec<usize>> = BTreeMap::new();
    let mut local = vec![0usize; col_degree.len()];
    for (c, d) in col_degree.iter().enumerate() {
        let cls = classes.entry(d).or_default();
        local[c] = cls.len();
        cls.push(c);
    }
    let mut out = Vec::new();
    for (d, cols) in classes {
        let sub = rows.iter().map(|r| {
            SparseVec::from_pairs(
                r.iter().filter(|(c, _)| col_degree[*c] == *d).map(|(c, x)| (local[c] as u32, x.clone())).collect(),
            )
        });
        let ns = solve_constraints(cols.len(), sub);
        if !ns.is_empty() {
            out.push((d.clone(), ns.into_iter().map(|v| v.map_indices(|i| cols[i])).collect()));
        }
    }
    out
}

/// The triality Lie algebra of a symmetric composition algebra, with a chosen basis.
#[derive(Clone, Debug)]
pub struct Triality {
    pub algebra: Arc<Algebra>,
    pub basis: Vec<TriElement>,
    /// Group and basis degrees, when built from a grading of the algebra.
    pub graded: Option<(AbelianGroup, Vec<GroupElement>)>,
    coord: Coordinatizer,
}

impl Triality {
    fn new(algebra: Arc<Algebra>, basis: Vec<TriElement>, graded: Option<(AbelianGroup, Vec<GroupElement>)>) -> Self {
        let n = algebra.dim();
        let flats: Vec<SparseVec> = basis.iter().map(|t| t.v.clone()).collect();
        let coord = Coordinatizer::from_basis(3 * n * n, &flats);
        Triality { algebra, basis, graded, coord }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates in the basis, or `None` outside tri.
    pub fn coords(&self, t: &TriElement) -> Option<SparseVec> {
        self.coord.coords(&t.v)
    }

    pub fn contains(&self, t: &TriElement) -> bool {
        self.coord.contains(&t.v)
    }

    pub fn element(&self, coords: &SparseVec) -> TriElement {
        let mut acc = DenseAcc::new(3 * self.algebra.dim().pow(2));
        for (p, x) in coords.iter() {
            acc.add_vec(&self.basis[p].v, x);
        }
        TriElement { n: self.algebra.dim(), v: acc.take() }
    }

    /// θ in basis coordinates.
    pub fn theta_matrix(&self) -> SparseMatrix {
        let cols = self.basis.iter().map(|b| self.coords(&theta(b)).expect("tri is θ-stable")).collect();
        SparseMatrix::from_cols(self.dim(), cols)
    }
}

/// tri(S) as the kernel of the triality and skew-symmetry conditions.
pub fn tri(s: &Algebra) -> Result<Triality> {
    let n = s.dim();
    let rows = triality_rows(s)?;
    let basis = solve_constraints(3 * n * n, rows).into_iter().map(|v| TriElement::from_flat(n, v)).collect();
    Ok(Triality::new(Arc::new(s.clone()), basis, None))
}

/// tri(S) with a basis homogeneous for the grading induced by `gr`:
/// `d` has degree μ when every `d_k` maps S_γ into S_{γ+μ}.
pub fn tri_graded(gr: &Grading) -> Result<Triality> {
    let s = &gr.algebra;
    let n = s.dim();
    let rows = triality_rows(s)?;
    let g = &gr.group;
    let mut col_degree = Vec::with_capacity(3 * n * n);
    for _ in 0..3 {
        for r in 0..n {
            for c in 0..n {
                col_degree.push(g.add(&gr.degrees[r], &g.neg(&gr.degrees[c])));
            }
        }
    }
    let mut basis = Vec::new();
    let mut degrees = Vec::new();
    for (d, vs) in solve_by_degree(&rows, &col_degree) {
        for v in vs {
            basis.push(TriElement::from_flat(n, v));
            degrees.push(d.clone());
        }
    }
    Ok(Triality::new(s.clone(), basis, Some((g.clone(), degrees))))
}

fn rank_of<'a>(ncols: usize, vs: impl IntoIterator<Item = &'a SparseVec>) -> usize {
    let mut e = Echelon::new(ncols);
    let mut acc = DenseAcc::new(ncols);
    for v in vs {
        e.insert_with(v, &mut acc);
    }
    e.rank()
}

fn random_vec(rng: &mut ChaCha8Rng, n: usize) -> SparseVec {
    SparseVec::from_pairs((0..n).map(|i| (i as u32, Scalar::int(rng.random_range(-3..=3)))).collect())
}

/// `[t_{a,b}, t_{x,y}] = t_{σ_{a,b}(x),y} + t_{x,σ_{a,b}(y)}`.
fn bracket_relation_holds(s: &Algebra, a: &SparseVec, b: &SparseVec, x: &SparseVec, y: &SparseVec) -> bool {
    let sab = sigma(s, a, b);
    let lhs = t_vec(s, a, b).bracket(&t_vec(s, x, y));
    let rhs = t_vec(s, &sab.apply(x), y).add_scaled(&t_vec(s, x, &sab.apply(y)), &Scalar::one());
    lhs == rhs
}

/// Structure of tri(S): dimension, π0 onto o(S,n), θ-stability, spanning by
/// t_{S,S}, and the bracket relation on every basis 4-tuple plus `samples`
/// random 4-tuples of elements.
pub fn verify_triality(tr: &Triality, samples: usize, seed: u64) -> Result<Report> {
    let s = &tr.algebra;
    let n = s.dim();
    let nn = n * n;
    let o = orthogonal_algebra(s)?;
    let pi0: Vec<SparseVec> = tr.basis.iter().map(|t| t.v.slice(0, nn)).collect();
    let pi0_rank = rank_of(nn, &pi0);
    if pi0_rank != tr.dim() || pi0_rank != o.len() {
        return Ok(Report::fail("triality", vec![pi0_rank, tr.dim(), o.len()], "π0 is not a bijection onto o(S,n)"));
    }
    for (p, b) in tr.basis.iter().enumerate() {
        if !tr.contains(&theta(b)) {
            return Ok(Report::fail("triality", vec![p], "θ does not preserve tri"));
        }
    }
    let mut ts = Vec::with_capacity(nn);
    for i in 0..n {
        for j in 0..n {
            let t = t_vec(s, &SparseVec::unit(i), &SparseVec::unit(j));
            if !tr.contains(&t) {
                return Ok(Report::fail("triality", vec![i, j], "t_{e_i,e_j} is not in tri"));
            }
            ts.push(t);
        }
    }
    let span = rank_of(3 * nn, ts.iter().map(|t| &t.v));
    if span != tr.dim() {
        return Ok(Report::fail("triality", vec![span, tr.dim()], "t_{S,S} does not span tri"));
    }
    // basis 4-tuples through bilinearity: t_{σ_{a,b}(x),y} = n(a,x)t_{b,y} − n(b,x)t_{a,y}
    let p = s.polar_or_err()?;
    let t = |i: usize, j: usize| &ts[i * n + j];
    let mut checked = 0u64;
    for a in 0..n {
        for b in 0..n {
            for x in 0..n {
                for y in 0..n {
                    let lhs = t(a, b).bracket(t(x, y));
                    let rhs = t(b, y)
                        .scale(&p[(a, x)])
                        .add_scaled(t(a, y), &-&p[(b, x)])
                        .add_scaled(t(x, b), &p[(a, y)])
                        .add_scaled(t(x, a), &-&p[(b, y)]);
                    checked += 1;
                    if lhs != rhs {
                        return Ok(Report::fail("triality", vec![a, b, x, y], "bracket relation fails on basis"));
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..samples {
        let v: Vec<SparseVec> = (0..4).map(|_| random_vec(&mut rng, n)).collect();
        checked += 1;
        if !bracket_relation_holds(s, &v[0], &v[1], &v[2], &v[3]) {
            return Ok(Report::fail("triality", vec![k], "bracket relation fails on a sampled 4-tuple"));
        }
    }
    Ok(Report::pass("triality")
        .with("dim", tr.dim())
        .with("o_dim", o.len())
        .with("t_span", span)
        .with("bracket_tuples", checked)
        .with("seed", seed))
}
