use crate::algebra::{solve_constraints, subalgebra_generated, verify_symmetric, Algebra, Element};
use crate::compose::symmetric::okubo;
use crate::error::{ForgeError, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::{Polynomial, Rational, Scalar};
use crate::linalg::{DenseAcc, Matrix, SparseMatrix, SparseVec};

/// A linear map between algebras; column `j` is the image of source basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMorphism {
    pub source: String,
    pub target: String,
    pub matrix: SparseMatrix,
}

impl AlgebraMorphism {
    /// First basis pair `(i, j)` with φ(e_i e_j) ≠ φ(e_i)φ(e_j).
    pub fn first_failure(&self, src: &Algebra, dst: &Algebra) -> Option<(usize, usize)> {
        let mut acc = DenseAcc::new(dst.dim());
        for i in 0..src.dim() {
            for j in 0..src.dim() {
                let lhs = self.matrix.apply_with(src.product(i, j), &mut acc);
                let rhs = dst.mul_with(&self.matrix.cols[i], &self.matrix.cols[j], &mut acc);
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix.rows == self.matrix.ncols() && Matrix::from_sparse(&self.matrix).rank() == self.matrix.rows
    }

    pub fn apply(&self, x: &SparseVec) -> SparseVec {
        self.matrix.apply(x)
    }
}

fn cubic(s: &Algebra, z: &SparseVec) -> Scalar {
    s.polar_vec(z, &s.mul(z, z))
}

fn check_isotropic_generator(s: &Algebra, x: &SparseVec, what: &str) -> Result<()> {
    if x.is_zero() || !s.norm_vec(x).is_zero() {
        return Err(ForgeError::HypothesesFail(format!("n({}) must vanish on a nonzero element", what)));
    }
    if cubic(s, x).is_zero() {
        return Err(ForgeError::HypothesesFail(format!("n({0}, {0}*{0}) must be nonzero", what)));
    }
    Ok(())
}

fn orthogonal_spans(s: &Algebra, a: &[SparseVec], b: &[SparseVec]) -> bool {
    a.iter().all(|u| b.iter().all(|v| s.polar_vec(u, v).is_zero()))
}

/// Kernel `{z : x*z = 0, z ⊥ alg⟨x⟩}` (or `z*x = 0` when `left` is false).
pub fn annihilator_space(s: &Algebra, x: &SparseVec, left: bool) -> Vec<SparseVec> {
    let n = s.dim();
    let gens = subalgebra_generated(s, std::slice::from_ref(x));
    let mult = if left { s.left_mult(x) } else { s.right_mult(x) };
    let rows = mult.transpose().cols.into_iter().chain(gens.iter().map(|g| {
        let p = s.polar().expect("form");
        SparseVec::from_dense(&p.apply(&g.to_dense(n)))
    }));
    solve_constraints(n, rows)
}

/// `t ↦ n(v + tw, (v + tw)*(v + tw))` as a cubic polynomial.
fn cubic_along(s: &Algebra, v: &SparseVec, w: &SparseVec) -> Polynomial {
    let vv = s.mul(v, v);
    let ww = s.mul(w, w);
    let vw = s.mul(v, w).add(&s.mul(w, v));
    Polynomial::new(vec![
        s.polar_vec(v, &vv),
        &s.polar_vec(w, &vv) + &s.polar_vec(v, &vw),
        &s.polar_vec(v, &ww) + &s.polar_vec(w, &vw),
        s.polar_vec(w, &ww),
    ])
}

/// Rational roots of a polynomial with rational coefficients, by the rational root test.
/// Gives up (returns nothing) on non-rational or oversized coefficients.
fn rational_roots(f: &Polynomial) -> Vec<Rational> {
    const LIMIT: u64 = 1 << 40;
    let Some(deg) = f.degree() else { return Vec::new() };
    if f.coeffs().iter().any(|c| !c.is_rational()) {
        return Vec::new();
    }
    let mut den = BigInt::one();
    for c in f.coeffs() {
        den = den.lcm(&c.a.denom());
    }
    let ints: Vec<BigInt> = f.coeffs().iter().map(|c| c.a.numer() * (&den / c.a.denom())).collect();
    let mut roots = Vec::new();
    // strip the factor t^m
    let low = ints.iter().position(|c| !c.is_zero()).expect("nonzero");
    if low > 0 {
        roots.push(Rational::zero());
    }
    let (c0, cd) = (ints[low].abs(), ints[deg].abs());
    let (Some(c0), Some(cd)) = (c0.to_u64(), cd.to_u64()) else { return roots };
    if c0 > LIMIT || cd > LIMIT {
        return roots;
    }
    for p in divisors(c0) {
        for q in divisors(cd) {
            if p.gcd(&q) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                let t = Rational::from_bigint(BigInt::from(p) * sign) * Rational::from_bigint(BigInt::from(q)).inv().expect("q > 0");
                if f.eval(&Scalar::rational(t.clone())).is_zero() {
                    roots.push(t);
                }
            }
        }
    }
    roots
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

const SEARCH_COEFFS: usize = 9;

fn search_coeff(k: usize) -> Scalar {
    match k {
        0 => Scalar::zero(),
        1 => Scalar::one(),
        2 => Scalar::int(-1),
        3 => Scalar::omega(),
        4 => -Scalar::omega(),
        5 => Scalar::omega2(),
        6 => -Scalar::omega2(),
        7 => Scalar::int(2),
        _ => Scalar::int(-2),
    }
}

/// Given isotropic `x` with n(x, x*x) ≠ 0, find `y` with n(y) = 0 ≠ n(y, y*y),
/// x*y = 0 and n(alg⟨x⟩, alg⟨y⟩) = 0.
pub fn complete_okubo_pair(s: &Algebra, x: &Element) -> Result<Element> {
    if s.dim() != 8 || x.dim() != 8 {
        return Err(ForgeError::HypothesesFail("algebra must be 8-dimensional".into()));
    }
    if !verify_symmetric(s)?.passed {
        return Err(ForgeError::HypothesesFail("not a symmetric composition algebra".into()));
    }
    let x = x.coords();
    check_isotropic_generator(s, x, "x")?;
    let space = annihilator_space(s, x, true);
    let ax = subalgebra_generated(s, std::slice::from_ref(x));
    let valid = |z: &SparseVec| {
        !z.is_zero()
            && s.norm_vec(z).is_zero()
            && !cubic(s, z).is_zero()
            && s.mul(x, z).is_zero()
            && orthogonal_spans(s, &ax, &subalgebra_generated(s, std::slice::from_ref(z)))
    };
    // basis vectors first, then pairs; prefer a candidate whose cubic value is a rational cube
    let mut candidates: Vec<SparseVec> = space.clone();
    for i in 0..space.len() {
        for j in i + 1..space.len() {
            for a in 1..SEARCH_COEFFS {
                for b in 1..SEARCH_COEFFS {
                    candidates.push(space[i].scale(&search_coeff(a)).add_scaled(&space[j], &search_coeff(b)));
                }
            }
        }
    }
    let cube_root = |z: &SparseVec| {
        let c = cubic(s, z);
        c.is_rational().then(|| c.a.cube_root()).flatten()
    };
    let mut first = None;
    for z in candidates {
        if !valid(&z) {
            continue;
        }
        if let Some(r) = cube_root(&z) {
            return Ok(s.element(z.scale(&Scalar::rational(r.inv()?))));
        }
        first.get_or_insert(z);
    }
    // no cube among them: solve n(z, z*z) = 1 along v_i + t v_j for rational t
    for i in 0..space.len() {
        for j in 0..space.len() {
            if i == j {
                continue;
            }
            let f = &cubic_along(s, &space[i], &space[j]) - &Polynomial::one();
            for t in rational_roots(&f) {
                let z = space[i].add_scaled(&space[j], &Scalar::rational(t));
                if valid(&z) {
                    return Ok(s.element(z));
                }
            }
        }
    }
    let y = first.ok_or(ForgeError::SearchExhausted)?;
    Ok(s.element(y))
}

/// The eight elements x, x*x, y, y*y, y*x, (y*y)*(x*x), x*(y*y), (x*x)*y.
fn pair_basis(s: &Algebra, x: &SparseVec, y: &SparseVec) -> Vec<SparseVec> {
    let xx = s.mul(x, x);
    let yy = s.mul(y, y);
    vec![
        x.clone(),
        xx.clone(),
        y.clone(),
        yy.clone(),
        s.mul(y, x),
        s.mul(&yy, &xx),
        s.mul(x, &yy),
        s.mul(&xx, y),
    ]
}

fn basis_matrix(n: usize, vs: &[SparseVec]) -> Matrix {
    Matrix::from_sparse(&SparseMatrix::from_cols(n, vs.to_vec()))
}

/// Recognize S as O_{α,β} with α = n(x,x*x), β = n(y,y*y), via x ↦ −x10, y ↦ −x01.
pub fn okubo_recognize(s: &Algebra, x: &Element, y: &Element) -> Result<(Scalar, Scalar, AlgebraMorphism)> {
    if s.dim() != 8 || x.dim() != 8 || y.dim() != 8 {
        return Err(ForgeError::HypothesesFail("algebra must be 8-dimensional".into()));
    }
    s.polar_or_err()?;
    let (x, y) = (x.coords(), y.coords());
    check_isotropic_generator(s, x, "x")?;
    check_isotropic_generator(s, y, "y")?;
    let ax = subalgebra_generated(s, std::slice::from_ref(x));
    let ay = subalgebra_generated(s, std::slice::from_ref(y));
    if !orthogonal_spans(s, &ax, &ay) {
        return Err(ForgeError::HypothesesFail("alg<x> and alg<y> are not orthogonal".into()));
    }
    if !s.mul(x, y).is_zero() {
        return Err(ForgeError::HypothesesFail("x*y must vanish".into()));
    }
    let alpha = cubic(s, x);
    let beta = cubic(s, y);
    let model = okubo(&alpha, &beta)?;
    let src = pair_basis(s, x, y);
    let dst = pair_basis(
        &model,
        &SparseVec::single(0, Scalar::int(-1)),
        &SparseVec::single(2, Scalar::int(-1)),
    );
    let b = basis_matrix(8, &src);
    let binv = b
        .inverse()
        .map_err(|_| ForgeError::HypothesesFail("x, y do not yield a basis".into()))?;
    let m = basis_matrix(8, &dst).mul(&binv);
    let iso = AlgebraMorphism { source: s.name().to_string(), target: model.name().to_string(), matrix: m.to_sparse() };
    if let Some((i, j)) = iso.first_failure(s, &model) {
        return Err(ForgeError::NotMultiplicative(format!("fails on basis pair ({}, {})", i, j)));
    }
    if !iso.is_invertible() {
        return Err(ForgeError::NotMultiplicative("map is singular".into()));
    }
    Ok((alpha, beta, iso))
}
