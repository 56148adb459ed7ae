use crate::algebra::Algebra;
use crate::compose::hurwitz::{cd_double, conjugation, quadratic, split_cayley, U, V};
use crate::error::{ForgeError, Result};
use crate::exact::Scalar;
use crate::linalg::{DenseAcc, Matrix, SparseMatrix, SparseVec};

/// Basis labels of O_{α,β}, in table column order.
pub const OKUBO_LABELS: [&str; 8] = ["x10", "x-10", "x01", "x0-1", "x11", "x-1-1", "x-11", "x1-1"];

/// (i, j) of each basis vector `x_{i,j}` of O_{α,β}.
pub const OKUBO_INDEX: [(i64, i64); 8] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1), (-1, 1), (1, -1)];

/// `x*y = τ(x̄)·τ²(ȳ)`; `τ = None` gives the para-Hurwitz product.
fn twisted(c: &Algebra, tau: Option<&SparseMatrix>, name: &str) -> Result<Algebra> {
    let conj = conjugation(c)?;
    let n = c.dim();
    let (a, b) = match tau {
        None => (conj.clone(), conj),
        Some(t) => (t.mul(&conj), t.mul(t).mul(&conj)),
    };
    let mut s = Algebra::new(n, name);
    let mut acc = DenseAcc::new(n);
    for i in 0..n {
        for j in 0..n {
            s.set_product(i, j, c.mul_with(&a.cols[i], &b.cols[j], &mut acc));
        }
    }
    s.set_polar(c.polar().expect("Hurwitz algebra has a norm").clone());
    Ok(s)
}

/// The para-Hurwitz algebra x•y = x̄·ȳ.
pub fn para_hurwitz(c: &Algebra) -> Result<Algebra> {
    twisted(c, None, &format!("para({})", c.name()))
}

/// Whether `t` is multiplicative on all basis pairs.
pub fn is_automorphism(c: &Algebra, t: &SparseMatrix) -> bool {
    let n = c.dim();
    if t.rows != n || t.ncols() != n {
        return false;
    }
    let mut acc = DenseAcc::new(n);
    for i in 0..n {
        for j in 0..n {
            let lhs = t.apply_with(c.product(i, j), &mut acc);
            let rhs = c.mul_with(&t.cols[i], &t.cols[j], &mut acc);
            if lhs != rhs {
                return false;
            }
        }
    }
    Matrix::from_sparse(t).rank() == n
}

/// The Petersson algebra x*y = τ(x̄)·τ²(ȳ).
pub fn petersson(c: &Algebra, tau: &SparseMatrix) -> Result<Algebra> {
    if !is_automorphism(c, tau) {
        return Err(ForgeError::NotAutomorphism);
    }
    if tau.mul(tau).mul(tau) != SparseMatrix::identity(c.dim()) {
        return Err(ForgeError::NotOrderDividing3);
    }
    twisted(c, Some(tau), &format!("petersson({})", c.name()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TauKind {
    Standard,
    NonStandard,
    Omega,
}

impl std::str::FromStr for TauKind {
    type Err = ForgeError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "st" => Ok(TauKind::Standard),
            "nst" => Ok(TauKind::NonStandard),
            "omega" => Ok(TauKind::Omega),
            _ => Err(ForgeError::Parse(format!("unknown automorphism '{}'", s))),
        }
    }
}

/// The order-3 automorphisms τ_st, τ_nst, τ_ω of the split Cayley algebra.
pub fn tau_automorphism(kind: TauKind) -> SparseMatrix {
    let mut cols: Vec<SparseVec> = (0..8).map(SparseVec::unit).collect();
    let pair = |a: usize, x: i64, b: usize, y: i64| {
        SparseVec::from_pairs(vec![(a as u32, Scalar::int(x)), (b as u32, Scalar::int(y))])
    };
    match kind {
        TauKind::Standard => {
            for i in 0..3 {
                cols[U[i]] = SparseVec::unit(U[(i + 1) % 3]);
                cols[V[i]] = SparseVec::unit(V[(i + 1) % 3]);
            }
        }
        TauKind::NonStandard => {
            cols[U[0]] = SparseVec::unit(U[1]);
            cols[U[1]] = pair(U[0], -1, U[1], -1);
            cols[V[0]] = pair(V[0], -1, V[1], 1);
            cols[V[1]] = SparseVec::single(V[0], Scalar::int(-1));
        }
        TauKind::Omega => {
            for i in 0..3 {
                let k = i as i64 + 1;
                cols[U[i]] = SparseVec::single(U[i], Scalar::omega_pow(k));
                cols[V[i]] = SparseVec::single(V[i], Scalar::omega_pow(-k));
            }
        }
    }
    SparseMatrix::from_cols(8, cols)
}

/// The one-dimensional symmetric composition algebra: 1*1 = 1, n(1) = 1.
pub fn s1() -> Algebra {
    let mut s = Algebra::new(1, "S1");
    s.set_product(0, 0, SparseVec::unit(0));
    s.set_polar(Matrix::from_ints(&[&[2]]));
    s
}

/// The two-dimensional algebra a•a = b, b•b = ξa, a•b = b•a = 0 with n(a,b) = ξ.
pub fn s2(xi: &Scalar) -> Result<Algebra> {
    if xi.is_zero() {
        return Err(ForgeError::ZeroParameter);
    }
    let mut s = Algebra::new(2, &format!("S2({})", xi));
    s.set_product(0, 0, SparseVec::unit(1));
    s.set_product(1, 1, SparseVec::single(0, xi.clone()));
    let z = Scalar::zero();
    s.set_polar(Matrix::from_rows(vec![vec![z.clone(), xi.clone()], vec![xi.clone(), z]]));
    Ok(s)
}

/// The Okubo algebra O_{α,β} on x10, x-10, x01, x0-1, x11, x-1-1, x-11, x1-1.
pub fn okubo(alpha: &Scalar, beta: &Scalar) -> Result<Algebra> {
    if alpha.is_zero() || beta.is_zero() {
        return Err(ForgeError::ZeroParameter);
    }
    let a = alpha.clone();
    let b = beta.clone();
    let ai = a.inv()?;
    let bi = b.inv()?;
    let ab = &a * &b;
    let one = Scalar::one();
    let neg = |x: &Scalar| -x;
    // row-major: (row, col, coefficient, target)
    #[rustfmt::skip]
    let table: Vec<(usize, usize, Scalar, usize)> = vec![
        (0, 0, neg(&a), 1), (0, 3, one.clone(), 7), (0, 5, one.clone(), 3), (0, 7, a.clone(), 5),
        (1, 1, neg(&ai), 0), (1, 2, one.clone(), 6), (1, 4, one.clone(), 2), (1, 6, ai.clone(), 4),
        (2, 0, one.clone(), 4), (2, 2, neg(&b), 3), (2, 4, b.clone(), 7), (2, 7, one.clone(), 0),
        (3, 1, one.clone(), 5), (3, 3, neg(&bi), 2), (3, 5, bi.clone(), 6), (3, 6, one.clone(), 1),
        (4, 0, a.clone(), 6), (4, 3, one.clone(), 0), (4, 4, neg(&ab), 5), (4, 6, b.clone(), 3),
        (5, 1, ai.clone(), 7), (5, 2, one.clone(), 1), (5, 5, neg(&ab.inv()?), 4), (5, 7, bi.clone(), 2),
        (6, 0, one.clone(), 2), (6, 2, b.clone(), 5), (6, 5, ai.clone(), 0), (6, 6, neg(&(&ai * &b)), 7),
        (7, 1, one.clone(), 3), (7, 3, bi.clone(), 4), (7, 4, a.clone(), 1), (7, 7, neg(&(&a * &bi)), 6),
    ];
    let mut s = Algebra::new(8, &format!("O({}, {})", alpha, beta));
    for (i, j, c, k) in table {
        s.set_product(i, j, SparseVec::single(k, c));
    }
    let mut p = Matrix::zero(8, 8);
    for k in 0..4 {
        p[(2 * k, 2 * k + 1)] = Scalar::one();
        p[(2 * k + 1, 2 * k)] = Scalar::one();
    }
    s.set_polar(p);
    Ok(s)
}

/// The Petersson algebra of CD(CD(K(−1), β), α) twisted by τ(a + bu) = a + (wb)u,
/// where w = −v satisfies w² + w + 1 = 0.
pub fn okubo_from_quaternion(beta: &Scalar, alpha: &Scalar) -> Result<Algebra> {
    if alpha.is_zero() || beta.is_zero() {
        return Err(ForgeError::ZeroParameter);
    }
    let k = quadratic(&Scalar::int(-1))?;
    let q = cd_double(&k, beta)?;
    let c = cd_double(&q, alpha)?;
    let w = SparseVec::single(1, Scalar::int(-1));
    let mut cols: Vec<SparseVec> = (0..8).map(SparseVec::unit).collect();
    for (i, col) in cols.iter_mut().enumerate().skip(4) {
        *col = q.mul(&w, &SparseVec::unit(i - 4)).shift(4);
    }
    let tau = SparseMatrix::from_cols(8, cols);
    let mut s = petersson(&c, &tau)?;
    s.set_name(&format!("okubo-quaternion({}, {})", beta, alpha));
    Ok(s)
}

/// The split Cayley algebra twisted by one of its standard order-3 automorphisms.
pub fn petersson_split(kind: TauKind) -> Algebra {
    let c = split_cayley();
    let mut s = petersson(&c, &tau_automorphism(kind)).expect("standard automorphisms have order 3");
    let tag = match kind {
        TauKind::Standard => "st",
        TauKind::NonStandard => "nst",
        TauKind::Omega => "omega",
    };
    s.set_name(&format!("petersson-split-{}", tag));
    s
}
