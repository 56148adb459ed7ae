use forge_core::algebra::{commutative_center, derivation_algebra, subalgebra_generated, verify_composition, verify_symmetric};
use forge_core::compose::*;
use forge_core::linalg::{Matrix, SparseVec};
use forge_core::{ForgeError, Scalar};

fn e(i: usize) -> SparseVec {
    SparseVec::unit(i)
}

fn s(i: i64) -> Scalar {
    Scalar::int(i)
}

fn vec_of(pairs: &[(usize, Scalar)]) -> SparseVec {
    SparseVec::from_pairs(pairs.iter().map(|(i, x)| (*i as u32, x.clone())).collect())
}

#[test]
fn split_cayley_spot_products() {
    let c = split_cayley();
    // u2 u3 = v1, v3 v1 = u2, e1 u1 = u1, u1 v1 = -e1, e1 e2 = 0
    assert_eq!(c.mul(&e(3), &e(4)), e(5));
    assert_eq!(c.mul(&e(7), &e(5)), e(3));
    assert_eq!(c.mul(&e(0), &e(2)), e(2));
    assert_eq!(c.mul(&e(2), &e(5)), e(0).neg());
    assert!(c.mul(&e(0), &e(1)).is_zero());
}

#[test]
fn split_cayley_is_hurwitz_and_conjugation_behaves() {
    let c = split_cayley();
    assert!(verify_composition(&c).unwrap().passed);
    let one = unity(&c).unwrap();
    assert_eq!(one, vec_of(&[(0, s(1)), (1, s(1))]));
    let conj = conjugation(&c).unwrap();
    assert_eq!(conj.apply(&e(0)), e(1));
    assert_eq!(conj.apply(&e(2)), e(2).neg());
    assert!(conj.mul(&conj) == forge_core::linalg::SparseMatrix::identity(8));
    // x x̄ = n(x) 1 on basis pairs, linearized: e_i ē_j + e_j ē_i = n(e_i, e_j) 1
    for i in 0..8 {
        for j in 0..8 {
            let lhs = c.mul(&e(i), &conj.cols[j]).add(&c.mul(&e(j), &conj.cols[i]));
            let rhs = one.scale(&c.polar_vec(&e(i), &e(j)));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn trilinear_form_on_u_is_alternating_and_nonzero() {
    let c = split_cayley();
    let u = [2, 3, 4];
    let mut nonzero = false;
    for &a in &u {
        for &b in &u {
            for &d in &u {
                let t = c.polar_vec(&e(a), &c.mul(&e(b), &e(d)));
                let swapped = c.polar_vec(&e(b), &c.mul(&e(a), &e(d)));
                assert_eq!(t, -&swapped);
                if a == b || b == d {
                    assert!(t.is_zero());
                }
                nonzero |= !t.is_zero();
            }
        }
    }
    assert!(nonzero);
}

#[test]
fn perturbed_split_cayley_fails_composition() {
    let mut c = split_cayley();
    let p = c.product(2, 3).add(&e(0));
    c.set_product(2, 3, p);
    let r = verify_composition(&c).unwrap();
    assert!(!r.passed);
    assert!(r.witness.is_some());
}

#[test]
fn cayley_dickson_tower() {
    let c = cd_tower(&[s(1), s(1), s(1)]).unwrap();
    assert_eq!(c.dim(), 8);
    assert!(verify_composition(&c).unwrap().passed);
    let q = cd_tower(&[s(2), s(-3)]).unwrap();
    // u u = λ 1 and n(u) = −λ
    assert_eq!(q.mul(&e(2), &e(2)), e(0).scale(&s(-3)));
    assert_eq!(q.norm_vec(&e(2)), s(3));
    assert_eq!(cd_double(&field_k(), &s(0)), Err(ForgeError::ZeroScalar));
    let k = quadratic(&s(-1)).unwrap();
    assert!(verify_composition(&k).unwrap().passed);
    assert!(verify_composition(&mat2()).unwrap().passed);
    assert!(matches!(cd_double(&s1_without_unity(), &s(1)), Err(ForgeError::NotHurwitz(_))));
}

fn s1_without_unity() -> forge_core::Algebra {
    s2(&s(1)).unwrap()
}

#[test]
fn unital_hurwitz_algebras_are_not_symmetric() {
    for c in [split_cayley(), cd_tower(&[s(1), s(2)]).unwrap(), quadratic(&s(-1)).unwrap(), mat2()] {
        assert!(!verify_symmetric(&c).unwrap().passed, "{}", c.name());
    }
}

#[test]
fn para_hurwitz_laws() {
    let c = split_cayley();
    let p = para_hurwitz(&c).unwrap();
    assert!(verify_symmetric(&p).unwrap().passed);
    assert_eq!(p.mul(&e(0), &e(0)), e(1));
    let one = unity(&c).unwrap();
    for i in 0..8 {
        let expect = one.scale(&p.polar_vec(&one, &e(i))).sub(&e(i));
        assert_eq!(p.mul(&one, &e(i)), expect);
        assert_eq!(p.mul(&e(i), &one), expect);
    }
    let center = commutative_center(&p);
    assert_eq!(center.len(), 1);
    assert!(Matrix::from_sparse(&forge_core::linalg::SparseMatrix::from_cols(8, vec![center[0].clone(), one]))
        .rank()
        == 1);
}

#[test]
fn tau_automorphisms_have_order_three() {
    let c = split_cayley();
    let id = forge_core::linalg::SparseMatrix::identity(8);
    for kind in [TauKind::Standard, TauKind::NonStandard, TauKind::Omega] {
        let t = tau_automorphism(kind);
        assert!(is_automorphism(&c, &t), "{:?}", kind);
        assert_ne!(t, id);
        assert_eq!(t.mul(&t).mul(&t), id);
    }
    assert_eq!(tau_automorphism(TauKind::Standard).apply(&e(4)), e(2));
    assert_eq!(tau_automorphism(TauKind::NonStandard).apply(&e(5)), vec_of(&[(5, s(-1)), (6, s(1))]));
    assert_eq!(tau_automorphism(TauKind::Omega).apply(&e(6)), e(6).scale(&Scalar::omega()));
}

#[test]
fn petersson_algebras() {
    let c = split_cayley();
    let id = forge_core::linalg::SparseMatrix::identity(8);
    assert_eq!(petersson(&c, &id).unwrap().mul(&e(2), &e(6)), para_hurwitz(&c).unwrap().mul(&e(2), &e(6)));
    for kind in [TauKind::Standard, TauKind::NonStandard, TauKind::Omega] {
        let p = petersson_split(kind);
        assert!(verify_symmetric(&p).unwrap().passed);
        assert!(commutative_center(&p).is_empty());
    }
    let nst = petersson_split(TauKind::NonStandard);
    assert_eq!(nst.mul(&vec_of(&[(0, s(1)), (1, s(1))]), &e(5)), e(6));
    let mut bad = id.clone();
    bad.cols[2] = e(2).scale(&s(2));
    assert_eq!(petersson(&c, &bad), Err(ForgeError::NotAutomorphism));
}

#[test]
fn okubo_spot_products_and_form() {
    let a = s(2);
    let b = s(3);
    let o = okubo(&a, &b).unwrap();
    assert_eq!(o.mul(&e(2), &e(2)), e(3).scale(&-&b));
    assert!(o.mul(&e(0), &e(2)).is_zero());
    assert_eq!(o.mul(&e(0), &e(0)), e(1).scale(&-&a));
    assert!(o.mul(&e(4), &e(5)).is_zero());
    assert_eq!(o.mul(&e(4), &e(4)), e(5).scale(&-&(&a * &b)));
    assert_eq!(okubo(&s(0), &s(1)), Err(ForgeError::ZeroParameter));
}

/// Re-derive the Okubo polar form from (x*y)*z + (z*y)*x = n(x,z) y by a linear solve.
#[test]
fn okubo_polar_form_is_forced_by_the_identity() {
    let o = okubo(&Scalar::omega(), &s(5)).unwrap();
    for x in 0..8 {
        for z in 0..8 {
            // unknown scalar c with lhs = c·e_y for every y
            let mut c: Option<Scalar> = None;
            for y in 0..8 {
                let lhs = o.mul(&o.mul(&e(x), &e(y)), &e(z)).add(&o.mul(&o.mul(&e(z), &e(y)), &e(x)));
                let m = Matrix::from_sparse(&forge_core::linalg::SparseMatrix::from_cols(8, vec![e(y)]));
                let sol = m.solve(&lhs.to_dense(8)).expect("lhs is a multiple of e_y");
                match &c {
                    None => c = Some(sol[0].clone()),
                    Some(v) => assert_eq!(v, &sol[0]),
                }
            }
            assert_eq!(c.unwrap(), o.polar().unwrap()[(x, z)], "pair ({}, {})", x, z);
        }
    }
}

#[test]
fn okubo_family_is_symmetric() {
    for (a, b) in [(s(1), s(1)), (s(2), s(3)), (Scalar::omega(), s(1)), (Scalar::frac(-1, 2), Scalar::omega2())] {
        let o = okubo(&a, &b).unwrap();
        assert!(verify_symmetric(&o).unwrap().passed);
        assert!(verify_composition(&o).unwrap().passed);
    }
    let q = okubo_from_quaternion(&s(1), &s(1)).unwrap();
    assert!(verify_symmetric(&q).unwrap().passed);
    assert!(commutative_center(&q).is_empty());
    let q = okubo_from_quaternion(&s(2), &s(-5)).unwrap();
    assert!(verify_symmetric(&q).unwrap().passed);
}

#[test]
fn generated_subalgebras() {
    let o = okubo(&s(1), &s(1)).unwrap();
    let g = subalgebra_generated(&o, &[e(0)]);
    assert_eq!(g.len(), 2);
    assert!(subalgebra_generated(&o, &[]).is_empty());
    let all: Vec<_> = (0..8).map(e).collect();
    assert_eq!(subalgebra_generated(&o, &all).len(), 8);
    assert_eq!(subalgebra_generated(&o, &g).len(), 2);
}

#[test]
fn derivation_dimensions() {
    let p = para_hurwitz(&split_cayley()).unwrap();
    assert_eq!(derivation_algebra(&p).len(), 14);
    assert_eq!(derivation_algebra(&okubo(&s(1), &s(1)).unwrap()).len(), 8);
    assert_eq!(derivation_algebra(&field_k()).len(), 0);
}

#[test]
fn recognition_on_the_model_itself() {
    let o = okubo(&s(2), &s(3)).unwrap();
    let x = o.element(e(0).neg());
    let y = o.element(e(2).neg());
    let (a, b, iso) = okubo_recognize(&o, &x, &y).unwrap();
    assert_eq!((a, b), (s(2), s(3)));
    assert_eq!(iso.matrix, forge_core::linalg::SparseMatrix::identity(8));
}

#[test]
fn recognition_of_the_nonstandard_petersson_algebra() {
    let p = petersson_split(TauKind::NonStandard);
    let x = p.element(e(0));
    let y = p.element(vec_of(&[(2, s(1)), (4, Scalar::frac(1, 3))]));
    let (a, b, _) = okubo_recognize(&p, &x, &y).unwrap();
    assert_eq!((a, b), (s(1), s(1)));
    let y2 = complete_okubo_pair(&p, &x).unwrap();
    let (a, b, iso) = okubo_recognize(&p, &x, &y2).unwrap();
    assert_eq!((a, b), (s(1), s(1)));
    assert!(iso.is_invertible());
}

#[test]
fn pair_completion_rejects_bad_input() {
    let o = okubo(&s(1), &s(1)).unwrap();
    let x = o.element(vec_of(&[(0, s(1)), (1, s(1))]));
    assert!(matches!(complete_okubo_pair(&o, &x), Err(ForgeError::HypothesesFail(_))));
    let y = complete_okubo_pair(&o, &o.element(e(0))).unwrap();
    assert!(o.mul(&e(0), y.coords()).is_zero());
}

#[test]
fn standard_petersson_and_okubo_11_complete_to_11() {
    for (alg, x) in [(petersson_split(TauKind::Standard), e(0)), (okubo(&s(1), &s(1)).unwrap(), e(0).neg())] {
        let x = alg.element(x);
        let y = complete_okubo_pair(&alg, &x).unwrap();
        let (a, b, iso) = okubo_recognize(&alg, &x, &y).unwrap();
        assert_eq!((a, b), (s(1), s(1)), "{}", alg.name());
        assert!(iso.first_failure(&alg, &okubo(&s(1), &s(1)).unwrap()).is_none());
    }
}

#[test]
fn recognition_rejects_a_pair_with_nonvanishing_product() {
    let o = okubo(&s(1), &s(1)).unwrap();
    // x01 * x10 = x11 is nonzero, x10 * x01 = 0
    let r = okubo_recognize(&o, &o.element(e(2)), &o.element(e(0)));
    assert!(matches!(r, Err(ForgeError::HypothesesFail(_))));
}
