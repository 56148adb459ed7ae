use crate::algebra::{verify_composition, Algebra};
use crate::error::{ForgeError, Result};
use crate::exact::Scalar;
use crate::linalg::{Matrix, SparseMatrix, SparseVec};

/// Index names of the canonical basis of the split Cayley algebra.
pub const SPLIT_LABELS: [&str; 8] = ["e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3"];

pub const E1: usize = 0;
pub const E2: usize = 1;
pub const U: [usize; 3] = [2, 3, 4];
pub const V: [usize; 3] = [5, 6, 7];

fn sv(pairs: &[(usize, Scalar)]) -> SparseVec {
    SparseVec::from_pairs(pairs.iter().map(|(i, x)| (*i as u32, x.clone())).collect())
}

/// The split Cayley algebra on its canonical basis e1, e2, u1, u2, u3, v1, v2, v3.
pub fn split_cayley() -> Algebra {
    let mut c = Algebra::new(8, "split-cayley");
    let one = Scalar::one();
    let m1 = Scalar::int(-1);
    c.set_product(E1, E1, SparseVec::unit(E1));
    c.set_product(E2, E2, SparseVec::unit(E2));
    for i in 0..3 {
        c.set_product(E1, U[i], SparseVec::unit(U[i]));
        c.set_product(U[i], E2, SparseVec::unit(U[i]));
        c.set_product(E2, V[i], SparseVec::unit(V[i]));
        c.set_product(V[i], E1, SparseVec::unit(V[i]));
        c.set_product(U[i], V[i], sv(&[(E1, m1.clone())]));
        c.set_product(V[i], U[i], sv(&[(E2, m1.clone())]));
        // u_i u_{i+1} = v_{i+2}, v_i v_{i+1} = u_{i+2}, and anticommutative
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        c.set_product(U[i], U[j], sv(&[(V[k], one.clone())]));
        c.set_product(U[j], U[i], sv(&[(V[k], m1.clone())]));
        c.set_product(V[i], V[j], sv(&[(U[k], one.clone())]));
        c.set_product(V[j], V[i], sv(&[(U[k], m1.clone())]));
    }
    let mut p = Matrix::zero(8, 8);
    p[(E1, E2)] = one.clone();
    p[(E2, E1)] = one.clone();
    for i in 0..3 {
        p[(U[i], V[i])] = one.clone();
        p[(V[i], U[i])] = one.clone();
    }
    c.set_polar(p);
    c
}

/// The ground field as a Hurwitz algebra: 1·1 = 1, n(1) = 1.
pub fn field_k() -> Algebra {
    let mut k = Algebra::new(1, "k");
    k.set_product(0, 0, SparseVec::unit(0));
    k.set_polar(Matrix::from_ints(&[&[2]]));
    k
}

/// K(μ) = k1 + kv with v² = v + μ and its generic norm.
pub fn quadratic(mu: &Scalar) -> Result<Algebra> {
    let four_mu_plus_1 = &(mu * &Scalar::int(4)) + &Scalar::one();
    if four_mu_plus_1.is_zero() {
        return Err(ForgeError::BadParams("4μ + 1 must be nonzero".into()));
    }
    let mut k = Algebra::new(2, &format!("K({})", mu));
    k.set_product(0, 0, SparseVec::unit(0));
    k.set_product(0, 1, SparseVec::unit(1));
    k.set_product(1, 0, SparseVec::unit(1));
    k.set_product(1, 1, sv(&[(0, mu.clone()), (1, Scalar::one())]));
    k.set_polar(Matrix::from_rows(vec![
        vec![Scalar::int(2), Scalar::one()],
        vec![Scalar::one(), &Scalar::int(-2) * mu],
    ]));
    Ok(k)
}

/// The split quaternions Mat₂(k) on E11, E12, E21, E22 with the determinant norm.
pub fn mat2() -> Algebra {
    let mut q = Algebra::new(4, "mat2");
    // E_ab E_cd = δ_bc E_ad; index of E_ab is 2a + b
    for a in 0..2 {
        for b in 0..2 {
            for d in 0..2 {
                q.set_product(2 * a + b, 2 * b + d, SparseVec::unit(2 * a + d));
            }
        }
    }
    let mut p = Matrix::zero(4, 4);
    p[(0, 3)] = Scalar::one();
    p[(3, 0)] = Scalar::one();
    p[(1, 2)] = Scalar::int(-1);
    p[(2, 1)] = Scalar::int(-1);
    q.set_polar(p);
    q
}

/// The unity, if the algebra has one.
pub fn unity(a: &Algebra) -> Result<SparseVec> {
    let n = a.dim();
    // e_c coefficients x_c: Σ x_c e_c e_j = e_j and Σ x_c e_j e_c = e_j
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for j in 0..n {
        let mut l = vec![Scalar::zero(); n * n];
        for c in 0..n {
            for (k, x) in a.product(c, j).iter() {
                l[k * n + c] += x;
            }
        }
        let mut r = vec![Scalar::zero(); n * n];
        for c in 0..n {
            for (k, x) in a.product(j, c).iter() {
                r[k * n + c] += x;
            }
        }
        for k in 0..n {
            let target = if k == j { Scalar::one() } else { Scalar::zero() };
            rows.push(l[k * n..(k + 1) * n].to_vec());
            rhs.push(target.clone());
            rows.push(r[k * n..(k + 1) * n].to_vec());
            rhs.push(target);
        }
    }
    let m = Matrix::from_rows(rows);
    m.solve(&rhs).map(|x| SparseVec::from_dense(&x)).ok_or(ForgeError::NoUnity)
}

/// Standard conjugation x̄ = n(x,1)1 − x as a matrix.
pub fn conjugation(c: &Algebra) -> Result<SparseMatrix> {
    let one = unity(c)?;
    c.polar_or_err()?;
    let cols = (0..c.dim())
        .map(|j| {
            let t = c.polar_vec(&SparseVec::unit(j), &one);
            one.scale(&t).sub(&SparseVec::unit(j))
        })
        .collect();
    Ok(SparseMatrix::from_cols(c.dim(), cols))
}

fn check_hurwitz(b: &Algebra) -> Result<(SparseVec, SparseMatrix)> {
    let one = unity(b).map_err(|_| ForgeError::NotHurwitz(format!("{} has no unity", b.name())))?;
    if !b.has_form() {
        return Err(ForgeError::NotHurwitz(format!("{} has no norm", b.name())));
    }
    let r = verify_composition(b)?;
    if !r.passed {
        return Err(ForgeError::NotHurwitz(format!("{}: {}", b.name(), r.note)));
    }
    Ok((one, conjugation(b)?))
}

/// Cayley–Dickson double `B ⊕ Bu`: basis b_k, then b_k u at `n + k`.
pub fn cd_double(b: &Algebra, lambda: &Scalar) -> Result<Algebra> {
    if lambda.is_zero() {
        return Err(ForgeError::ZeroScalar);
    }
    let (_, conj) = check_hurwitz(b)?;
    let n = b.dim();
    let mut c = Algebra::new(2 * n, &format!("CD({}, {})", b.name(), lambda));
    let ei = |i: usize| SparseVec::unit(i);
    for i in 0..n {
        for j in 0..n {
            // b_i b_j
            c.set_product(i, j, b.product(i, j).clone());
            // b_i (b_j u) = (b_j b_i) u
            c.set_product(i, n + j, b.product(j, i).shift(n));
            // (b_i u) b_j = (b_i b̄_j) u
            c.set_product(n + i, j, b.mul(&ei(i), &conj.cols[j]).shift(n));
            // (b_i u)(b_j u) = λ b̄_j b_i
            c.set_product(n + i, n + j, b.mul(&conj.cols[j], &ei(i)).scale(lambda));
        }
    }
    let p = b.polar().expect("checked");
    let mut q = Matrix::zero(2 * n, 2 * n);
    let ml = -lambda;
    for i in 0..n {
        for j in 0..n {
            q[(i, j)] = p[(i, j)].clone();
            q[(n + i, n + j)] = &p[(i, j)] * &ml;
        }
    }
    c.set_polar(q);
    Ok(c)
}

/// Iterated doubling of the ground field.
pub fn cd_tower(lambdas: &[Scalar]) -> Result<Algebra> {
    let mut a = field_k();
    for l in lambdas {
        a = cd_double(&a, l)?;
    }
    let name = format!(
        "CD(k{})",
        lambdas.iter().map(|l| format!(", {}", l)).collect::<String>()
    );
    a.set_name(&name);
    Ok(a)
}
