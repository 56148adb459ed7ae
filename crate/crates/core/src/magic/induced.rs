use std::collections::BTreeMap;
use std::str::FromStr;
use std::sync::Arc;

use crate::algebra::{derivation_rows, Algebra};
use crate::compose::{s1, s2};
use crate::error::{ForgeError, Result};
use crate::exact::Scalar;
use crate::grading::{coarsen, AbelianGroup, GroupElement, GroupHom, Grading};
use crate::linalg::{DenseAcc, Echelon, SparseMatrix, SparseVec};
use crate::magic::albert::albert;
use crate::magic::lie::matrix_lie_algebra;
use crate::magic::tri::{solve_by_degree, tri_graded};
use crate::magic::{big_theta, magic_g_graded};

/// What an input grading of a symmetric composition algebra is transported to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    /// o(S,n) ≅ tri(S), refined by the θ-eigenspaces.
    Orthogonal,
    /// Der S with the grading it inherits.
    Derivations,
    /// A(S), with the ι-index in Z2² or refined by θ_A.
    Albert,
    /// g(k,S).
    F4,
    /// g(S2,S) with S2 = s2(1) ungraded.
    E6,
    /// g(S,S′).
    E8,
    /// g(S,S′) with degrees (μ, ν, γ) coarsened to (μ + ν, γ).
    Dempwolff,
}

impl Target {
    pub const ALL: [Target; 7] =
        [Target::Orthogonal, Target::Derivations, Target::Albert, Target::F4, Target::E6, Target::E8, Target::Dempwolff];

    pub fn name(self) -> &'static str {
        match self {
            Target::Orthogonal => "orthogonal",
            Target::Derivations => "derivations",
            Target::Albert => "albert",
            Target::F4 => "f4",
            Target::E6 => "e6",
            Target::E8 => "e8",
            Target::Dempwolff => "dempwolff",
        }
    }
}

impl FromStr for Target {
    type Err = ForgeError;
    fn from_str(s: &str) -> Result<Self> {
        Target::ALL.iter().copied().find(|t| t.name() == s).ok_or_else(|| ForgeError::Parse(format!("unknown target '{}'", s)))
    }
}

/// 2-elementary gradings add the Z2² index of ι; 3-elementary ones are refined by Θ.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Two,
    Three,
}

fn kind_of(g: &AbelianGroup) -> Result<Kind> {
    if g.free_rank == 0 && !g.torsion.is_empty() {
        if g.torsion.iter().all(|&m| m == 2) {
            return Ok(Kind::Two);
        }
        if g.torsion.iter().all(|&m| m == 3) {
            return Ok(Kind::Three);
        }
    }
    Err(ForgeError::IncompatibleInputs(format!("expected an elementary 2- or 3-group, got {}", g)))
}

fn z2sq_degree(i: usize) -> GroupElement {
    let c = [[1, 0], [0, 1], [1, 1]][i];
    GroupElement { free: vec![], torsion: c.to_vec() }
}

fn trivially_graded(a: Algebra) -> Result<Grading> {
    let n = a.dim();
    Grading::from_coords(Arc::new(a), AbelianGroup::trivial(), &vec![vec![]; n])
}

/// Eigenvectors `v + ω^{2j}T(v) + ω^jT²(v)` of `op`, component by component.
fn split_order3(dim: usize, comps: &BTreeMap<GroupElement, Vec<usize>>, op: &SparseMatrix) -> Result<Vec<(GroupElement, i64, SparseVec)>> {
    let mut owner = vec![None; dim];
    for (g, idx) in comps {
        for &i in idx {
            owner[i] = Some(g);
        }
    }
    let mut acc = DenseAcc::new(dim);
    let mut out = Vec::with_capacity(dim);
    for (g, idx) in comps {
        for &i in idx {
            if op.cols[i].iter().any(|(r, _)| owner[r] != Some(g)) {
                return Err(ForgeError::IncompatibleInputs(format!("operator moves e{} out of its component", i)));
            }
        }
        let mut found = 0;
        for j in 0..3i64 {
            let (w2, w) = (Scalar::omega_pow(2 * j), Scalar::omega_pow(j));
            let mut e = Echelon::new(dim);
            for &i in idx {
                let v = SparseVec::unit(i);
                let tv = op.apply_with(&v, &mut acc);
                let ttv = op.apply_with(&tv, &mut acc);
                let p = v.add_scaled(&tv, &w2).add_scaled(&ttv, &w);
                if e.insert_with(&p, &mut acc) {
                    out.push((g.clone(), j, p));
                    found += 1;
                }
            }
        }
        if found != idx.len() {
            return Err(ForgeError::IncompatibleInputs("operator is not of order dividing 3 on a component".into()));
        }
    }
    Ok(out)
}

fn join_z3(group: &AbelianGroup, split: &[(GroupElement, i64, SparseVec)]) -> (AbelianGroup, Vec<GroupElement>) {
    let z3 = AbelianGroup::cyclic_product(&[3]);
    let degrees = split.iter().map(|(g, j, _)| g.join(&z3.element(&[*j]).expect("arity 1"))).collect();
    (group.product(&z3), degrees)
}

/// Refine a grading by an order-3 automorphism preserving its components.
/// The algebra is rewritten on a basis of homogeneous eigenvectors; the new
/// degree is (old degree, j) for eigenvalue ω^j.
pub fn refine_by_order3(gr: &Grading, op: &SparseMatrix) -> Result<Grading> {
    let a = &gr.algebra;
    let split = split_order3(a.dim(), &gr.components(), op)?;
    let basis: Vec<SparseVec> = split.iter().map(|s| s.2.clone()).collect();
    let refined = a.restrict(&basis, a.name())?;
    let (group, degrees) = join_z3(&gr.group, &split);
    Grading::new(Arc::new(refined), group, degrees)
}

fn orthogonal(s: &Grading) -> Result<Grading> {
    let tr = tri_graded(s)?;
    let (group, degs) = tr.graded.clone().expect("graded triality");
    let mut comps: BTreeMap<GroupElement, Vec<usize>> = BTreeMap::new();
    for (p, d) in degs.into_iter().enumerate() {
        comps.entry(d).or_default().push(p);
    }
    let split = split_order3(tr.dim(), &comps, &tr.theta_matrix())?;
    let mats: Vec<SparseMatrix> = split.iter().map(|(_, _, v)| tr.element(v).part(0)).collect();
    let l = matrix_lie_algebra(&mats, &format!("o({})", s.algebra.name()))?;
    let (group, degrees) = join_z3(&group, &split);
    Grading::new(Arc::new(l), group, degrees)
}

fn derivations(s: &Grading) -> Result<Grading> {
    let a = &s.algebra;
    let n = a.dim();
    let g = &s.group;
    let mut col_degree = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            col_degree.push(g.add(&s.degrees[r], &g.neg(&s.degrees[c])));
        }
    }
    let mut mats = Vec::new();
    let mut degrees = Vec::new();
    for (d, vs) in solve_by_degree(&derivation_rows(a), &col_degree) {
        for v in vs {
            mats.push(SparseMatrix::unflatten(&v, n, n));
            degrees.push(d.clone());
        }
    }
    let l = matrix_lie_algebra(&mats, &format!("Der {}", a.name()))?;
    Grading::new(Arc::new(l), g.clone(), degrees)
}

fn albert_grading(s: &Grading) -> Result<Grading> {
    let kind = kind_of(&s.group)?;
    let j = albert(&s.algebra)?;
    let n = s.algebra.dim();
    let z2sq = AbelianGroup::cyclic_product(&[2, 2]);
    let group = if kind == Kind::Two { s.group.product(&z2sq) } else { s.group.clone() };
    let zero = group.zero();
    let mut degrees = vec![zero; 3];
    for i in 0..3 {
        for a in 0..n {
            degrees.push(match kind {
                Kind::Two => s.degrees[a].join(&z2sq_degree(i)),
                Kind::Three => s.degrees[a].clone(),
            });
        }
    }
    let gr = Grading::new(j.jordan.clone(), group, degrees)?;
    match kind {
        Kind::Two => Ok(gr),
        Kind::Three => refine_by_order3(&gr, &j.theta),
    }
}

/// The grading of g(S,S′) with tri(S)_μ in (μ,0), tri(S′)_ν in (0,ν) and
/// ι_i(S_μ⊗S′_ν) in (μ,ν), completed by the ι index or by Θ.
fn magic_grading(gl: &Grading, gr: &Grading, kind: Kind) -> Result<Grading> {
    let g = magic_g_graded(gl, gr)?;
    let z2sq = AbelianGroup::cyclic_product(&[2, 2]);
    let base = gl.group.product(&gr.group);
    let group = if kind == Kind::Two { base.product(&z2sq) } else { base };
    let extra = |i: Option<usize>| match (kind, i) {
        (Kind::Two, Some(i)) => z2sq_degree(i),
        (Kind::Two, None) => z2sq.zero(),
        _ => GroupElement { free: vec![], torsion: vec![] },
    };
    let (ld, rd) = (g.left.graded.clone().expect("graded").1, g.right.graded.clone().expect("graded").1);
    let mut degrees = Vec::with_capacity(g.dim());
    for d in &ld {
        degrees.push(d.join(&gr.group.zero()).join(&extra(None)));
    }
    for d in &rd {
        degrees.push(gl.group.zero().join(d).join(&extra(None)));
    }
    for i in 0..3 {
        for a in &gl.degrees {
            for b in &gr.degrees {
                degrees.push(a.join(b).join(&extra(Some(i))));
            }
        }
    }
    let graded = Grading::new(g.lie.clone(), group, degrees)?;
    match kind {
        Kind::Two => Ok(graded),
        Kind::Three => refine_by_order3(&graded, &big_theta(&g)),
    }
}

/// The grading induced on `target` by a grading of S (and of S′ for the E8 targets).
pub fn induced_grading(target: Target, s: &Grading, s_prime: Option<&Grading>) -> Result<Grading> {
    let need_prime = matches!(target, Target::E8 | Target::Dempwolff);
    if need_prime != s_prime.is_some() {
        return Err(ForgeError::IncompatibleInputs(format!(
            "target {} takes {} graded algebra(s)",
            target.name(),
            if need_prime { 2 } else { 1 }
        )));
    }
    let kind = kind_of(&s.group)?;
    match target {
        Target::Orthogonal => orthogonal(s),
        Target::Derivations => derivations(s),
        Target::Albert => albert_grading(s),
        Target::F4 => magic_grading(&trivially_graded(s1())?, s, kind),
        Target::E6 => magic_grading(&trivially_graded(s2(&Scalar::one())?)?, s, kind),
        Target::E8 | Target::Dempwolff => {
            let sp = s_prime.expect("checked");
            if kind_of(&sp.group)? != kind {
                return Err(ForgeError::IncompatibleInputs("S and S′ gradings are of different kinds".into()));
            }
            let g = magic_grading(s, sp, kind)?;
            if target == Target::E8 {
                return Ok(g);
            }
            if kind != Kind::Two || s.group != sp.group {
                return Err(ForgeError::IncompatibleInputs("the Dempwolff coarsening needs equal 2-elementary gradings".into()));
            }
            let k = s.group.arity();
            let target_group = s.group.product(&AbelianGroup::cyclic_product(&[2, 2]));
            let unit = |i: usize| {
                let mut c = vec![0; k + 2];
                c[i] = 1;
                c
            };
            let images = (0..k).map(unit).chain((0..k).map(unit)).chain([unit(k), unit(k + 1)]).collect();
            let hom = GroupHom::new(g.group.clone(), target_group, images)?;
            coarsen(&g, &hom)
        }
    }
}
