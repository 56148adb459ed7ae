use std::sync::Arc;

use forge_core::algebra::{verify_jordan, verify_lie, Algebra, JacobiPolicy};
use forge_core::compose::*;
use forge_core::grading::*;
use forge_core::linalg::{minimal_polynomial, SparseMatrix, SparseVec};
use forge_core::magic::*;
use forge_core::{ForgeError, Polynomial, Scalar};

fn one() -> Scalar {
    Scalar::one()
}

fn para_cayley() -> Algebra {
    para_hurwitz(&cd_tower(&[one(), one(), one()]).unwrap()).unwrap()
}

/// Para-Cayley with the Z2³-grading read off the Cayley–Dickson index bits.
fn graded_para_cayley() -> Grading {
    let c = cayley_grading(CayleyGrading::Z2Cube, &[]).unwrap();
    Grading::new(Arc::new(para_cayley()), c.group, c.degrees).unwrap()
}

fn okubo_z3sq() -> Grading {
    okubo_grading(OkuboGrading::Z3Sq, &[]).unwrap()
}

fn o11() -> Algebra {
    okubo(&one(), &one()).unwrap()
}

#[test]
fn triality_algebras_of_eight_dimensional_algebras() {
    for s in [para_cayley(), o11(), petersson_split(TauKind::NonStandard)] {
        let tr = tri(&s).unwrap();
        assert_eq!(tr.dim(), 28, "{}", s.name());
        let r = verify_triality(&tr, 20, 11).unwrap();
        assert!(r.passed, "{}", r);
        for b in &tr.basis {
            assert_eq!(theta(&theta(&theta(b))), *b);
        }
    }
}

#[test]
fn t_xx_has_zero_first_slot() {
    let s = o11();
    for i in 0..8 {
        let x = s.basis_element(i);
        assert!(t_xy(&s, &x, &x).unwrap().part(0).is_zero());
    }
    assert_eq!(t_xy(&s, &s1().basis_element(0), &s.basis_element(0)), Err(ForgeError::MixedAlgebras));
}

#[test]
fn small_triality_algebras() {
    assert_eq!(tri(&s1()).unwrap().dim(), 0);
    // tri(S2) = {(εσ, δσ, γσ) : ε + δ + γ = 0} with σ = σ_{a,b}
    let s = s2(&Scalar::int(3)).unwrap();
    let tr = tri(&s).unwrap();
    assert_eq!(tr.dim(), 2);
    let sg = sigma(&s, &SparseVec::unit(0), &SparseVec::unit(1));
    let zero = SparseMatrix::zero(2, 2);
    for (e, d, g) in [(1, -1, 0), (0, 1, -1), (2, 5, -7)] {
        let t = TriElement::from_parts([&sg.scale(&Scalar::int(e)), &sg.scale(&Scalar::int(d)), &sg.scale(&Scalar::int(g))]);
        assert!(tr.contains(&t));
    }
    assert!(!tr.contains(&TriElement::from_parts([&sg, &zero, &zero])));
    // each basis element is (εσ, δσ, γσ) with ε + δ + γ = 0
    let (r, c) = sg.cols.iter().enumerate().find_map(|(c, col)| col.iter().next().map(|(r, _)| (r, c))).unwrap();
    for b in &tr.basis {
        let p = b.parts();
        let mut sum = Scalar::zero();
        for part in &p {
            let k = part.get(r, c).checked_div(&sg.get(r, c)).unwrap();
            assert_eq!(*part, sg.scale(&k));
            sum += &k;
        }
        assert!(sum.is_zero());
    }
}

#[test]
fn graded_triality_has_no_zero_component() {
    let tr = tri_graded(&graded_para_cayley()).unwrap();
    let (g, degs) = tr.graded.clone().unwrap();
    assert_eq!(tr.dim(), 28);
    assert!(degs.iter().all(|d| *d != g.zero()));
    // seven components of dimension four
    let mut counts = std::collections::BTreeMap::new();
    for d in degs {
        *counts.entry(d).or_insert(0) += 1;
    }
    assert_eq!(counts.len(), 7);
    assert!(counts.values().all(|&c| c == 4));
}

#[test]
fn magic_square_dimensions() {
    let s2_1 = s2(&one()).unwrap();
    let cases: Vec<(Algebra, Algebra, usize)> = vec![
        (s1(), para_cayley(), 52),
        (s2_1.clone(), o11(), 78),
        (s1(), s2_1.clone(), 8),
        (s2_1.clone(), s2_1.clone(), 16),
    ];
    for (a, b, want) in cases {
        let g = magic_g(&a, &b).unwrap();
        // dim tri(S) + dim tri(S′) + 3 dim S dim S′
        let formula = tri(&a).unwrap().dim() + tri(&b).unwrap().dim() + 3 * a.dim() * b.dim();
        assert_eq!(g.dim(), want);
        assert_eq!(formula, want);
        let r = verify_lie(&g.lie, g.jacobi_policy(false, 0));
        assert!(r.passed, "{}", r);
        assert_eq!(r.values["mode"], "full");
        assert!(verify_grading(&g.z2sq).passed);
        assert!(verify_automorphism(&g.lie, &big_theta(&g)).passed);
    }
    let e8 = magic_g_graded(&graded_para_cayley(), &graded_para_cayley()).unwrap();
    assert_eq!(e8.dim(), 248);
    let r = verify_lie(&e8.lie, e8.jacobi_policy(false, 5));
    assert!(r.passed, "{}", r);
    assert!(verify_grading(&e8.z2sq).passed);
}

#[test]
fn e8_jacobi_full_scan() {
    let e8 = magic_g_graded(&graded_para_cayley(), &graded_para_cayley()).unwrap();
    let r = verify_lie(&e8.lie, JacobiPolicy::Full);
    assert!(r.passed, "{}", r);
    assert_eq!(r.values["triples"], 248 * 247 * 246 / 6);
}

#[test]
fn semisimplicity_via_killing_form() {
    let s2_1 = s2(&one()).unwrap();
    for (a, b) in [(s1(), para_cayley()), (s2_1.clone(), o11()), (s1(), s2_1.clone()), (s2_1.clone(), s2_1)] {
        let g = magic_g(&a, &b).unwrap();
        assert_eq!(killing_form(&g.lie).rank(), g.dim());
    }
}

#[test]
fn big_theta_cycles_the_z2sq_components() {
    let g = magic_g(&s1(), &o11()).unwrap();
    let th = big_theta(&g);
    let z = AbelianGroup::cyclic_product(&[2, 2]);
    let deg = |v: &[i64]| z.element(v).unwrap();
    let next = |d: &GroupElement| match d.torsion.as_slice() {
        [0, 0] => deg(&[0, 0]),
        [1, 0] => deg(&[0, 1]),
        [0, 1] => deg(&[1, 1]),
        _ => deg(&[1, 0]),
    };
    for (k, col) in th.cols.iter().enumerate() {
        let want = next(&g.z2sq.degrees[k]);
        assert!(col.iter().all(|(r, _)| g.z2sq.degrees[r] == want), "column {}", k);
    }
    let third = th.mul(&th).mul(&th);
    assert_eq!(third, SparseMatrix::identity(g.dim()));
    let e = order3_eigen_dims(&th);
    assert_eq!(e.iter().sum::<usize>(), 52);
}

#[test]
fn unsupported_dimensions_are_rejected() {
    let q = para_hurwitz(&mat2()).unwrap();
    assert!(matches!(magic_g(&q, &s1()), Err(ForgeError::BadDimensions(_))));
    assert!(matches!(magic_g(&s1(), &split_cayley()), Err(ForgeError::NotSymmetricComposition)));
}

#[test]
fn albert_algebras_are_jordan() {
    for s in [para_cayley(), o11()] {
        let j = albert(&s).unwrap();
        assert_eq!(j.jordan.dim(), 27);
        let r = verify_jordan(&j.jordan);
        assert!(r.passed, "{}", r);
        // (1,1,1) is the unity
        let u = SparseVec::from_pairs((0..3).map(|i| (i, one())).collect());
        for k in 0..27 {
            assert_eq!(j.jordan.mul(&u, &SparseVec::unit(k)), SparseVec::unit(k));
        }
        // ι_0(a)∘ι_0(b) = 2n(a,b)(e_1 + e_2)
        let p = s.polar().unwrap();
        for a in 0..8 {
            for b in 0..8 {
                let c = &p[(a, b)] * &Scalar::int(2);
                let want = SparseVec::from_pairs(vec![(1, c.clone()), (2, c)]);
                assert_eq!(*j.jordan.product(j.iota(0, a), j.iota(0, b)), want);
            }
        }
        assert!(is_automorphism(&j.jordan, &j.theta));
    }
    // a commutative algebra that is not Jordan
    assert!(!verify_jordan(&s2(&one()).unwrap()).passed);
    assert!(matches!(albert(&split_cayley()), Err(ForgeError::NotSymmetricComposition)));
}

#[test]
fn derivations_d_i_and_phi() {
    for s in [para_cayley(), o11()] {
        let j = albert(&s).unwrap();
        let r = verify_d_rules(&j).unwrap();
        assert!(r.passed, "{}", r);
        let phi = phi_iso(&s).unwrap();
        assert!(phi.report.passed, "{}", phi.report);
        assert_eq!(phi.derivations.len(), 52);
        assert!(phi.map.first_failure(&phi.g.lie, &phi.der).is_none());
        assert!(phi.map.is_invertible());
    }
    assert!(d_i_derivation(&albert(&o11()).unwrap(), 3, &SparseVec::unit(0)).is_err());
}

#[test]
fn induced_type_tuples() {
    let pc = graded_para_cayley();
    let o = okubo_z3sq();
    let cases: Vec<(Target, &Grading, Option<&Grading>, Vec<usize>)> = vec![
        (Target::Orthogonal, &pc, None, vec![14, 7]),
        (Target::Orthogonal, &o, None, vec![24, 2]),
        (Target::Derivations, &pc, None, vec![0, 7]),
        (Target::Albert, &pc, None, vec![24, 0, 1]),
        (Target::Albert, &o, None, vec![27]),
        (Target::F4, &pc, None, vec![24, 0, 0, 7]),
        (Target::F4, &o, None, vec![0, 26]),
        (Target::E6, &o, None, vec![0, 0, 26]),
        (Target::E8, &pc, Some(&pc), vec![192, 0, 0, 14]),
        (Target::E8, &o, Some(&o), vec![240, 0, 0, 2]),
        (Target::Dempwolff, &pc, Some(&pc), [vec![0; 7], vec![31]].concat()),
    ];
    for (t, s, sp, want) in cases {
        let g = induced_grading(t, s, sp).unwrap();
        assert!(verify_grading(&g).passed, "{:?}", t);
        assert_eq!(grading_type(&g).unwrap(), want, "{:?}", t);
    }
    assert!(matches!(induced_grading(Target::E8, &pc, None), Err(ForgeError::IncompatibleInputs(_))));
    assert!(matches!(induced_grading(Target::E8, &pc, Some(&o)), Err(ForgeError::IncompatibleInputs(_))));
    let z4 = cayley_grading(CayleyGrading::Z4, &[]).unwrap();
    assert!(matches!(induced_grading(Target::F4, &z4, None), Err(ForgeError::IncompatibleInputs(_))));
}

#[test]
fn toral_and_cartan_checks() {
    // the Cartan subalgebra of o(O,n) in degrees (0,0,1) and (0,0,2)
    let o = induced_grading(Target::Orthogonal, &okubo_z3sq(), None).unwrap();
    let z33 = AbelianGroup::cyclic_product(&[3, 3, 3]);
    let comps = o.components();
    let mut h: Vec<SparseVec> = Vec::new();
    for j in [1, 2] {
        h.extend(comps[&z33.element(&[0, 0, j]).unwrap()].iter().map(|&i| SparseVec::unit(i)));
    }
    assert_eq!(h.len(), 4);
    assert!(is_toral(&o.algebra, &h).passed);
    assert!(is_cartan(&o.algebra, &h).passed);
    // a single element of that Cartan subalgebra is toral but not self-normalizing
    let r = is_cartan(&o.algebra, &h[..1]);
    assert!(!r.passed);
    assert!(r.witness.is_some());
    // nilpotent: E12 in gl2
    let e = |r: usize, c: usize| SparseMatrix::from_cols(2, (0..2).map(|k| if k == c { SparseVec::unit(r) } else { SparseVec::new() }).collect());
    let gl2 = matrix_lie_algebra(&[e(0, 0), e(0, 1), e(1, 0), e(1, 1)], "gl2").unwrap();
    let r = is_toral(&gl2, &[SparseVec::unit(1)]);
    assert!(!r.passed);
}

#[test]
fn ad_of_iota_elements_in_e8() {
    let g = magic_g_graded(&graded_para_cayley(), &graded_para_cayley()).unwrap();
    // e_0 is the unity of the Cayley algebra, with n = 1 on both sides
    let bound = Polynomial::from_ints(&[0, 4, 0, 5, 0, 1]); // X(X²+1)(X²+4)
    for i in 0..3 {
        let x = SparseVec::unit(g.iota(i, 0, 0));
        let p = minimal_polynomial(&ad(&g.lie, &x));
        assert!(p.divides(&bound).unwrap(), "{}", p);
        assert!(p.is_squarefree().unwrap());
    }
}

#[test]
fn toral_operator_minimal_polynomial_and_kernel() {
    let r = verify_toral_operator(&one(), &one(), &one(), &one(), &one()).unwrap();
    assert!(r.passed, "{}", r);
    assert_eq!(r.values["minpoly_on_image"], "X^6 - 1");
    assert_eq!(r.values["minpoly"], "X^7 - X");
    let r = verify_toral_operator(&Scalar::int(2), &Scalar::int(-3), &Scalar::int(5), &Scalar::omega(), &Scalar::frac(1, 2)).unwrap();
    assert!(r.passed, "{}", r);
    assert_eq!(toral_operator(&one(), &one(), &Scalar::zero(), &one(), &one()), Err(ForgeError::ZeroParameter));
}

#[test]
fn jordan_gradings() {
    let pc = graded_para_cayley();
    let o = okubo_z3sq();
    let g2 = induced_grading(Target::Derivations, &pc, None).unwrap();
    let r = jordan_grading_check(&g2, JordanKind::Plain).unwrap();
    assert!(r.passed, "{}", r);
    assert_eq!(r.values["components"], 7);
    for (t, dim) in [(Target::F4, 2), (Target::E6, 3)] {
        let g = induced_grading(t, &o, None).unwrap();
        let r = jordan_grading_check(&g, JordanKind::PlusMinus).unwrap();
        assert!(r.passed, "{:?}: {}", t, r);
        assert_eq!(r.values["components"], 26);
        assert_eq!(r.values["component_dim"], dim);
        assert_eq!(r.values["cartan_checked"], 13);
    }
    let e8 = induced_grading(Target::Dempwolff, &pc, Some(&pc)).unwrap();
    let r = jordan_grading_check(&e8, JordanKind::Dempwolff).unwrap();
    assert!(r.passed, "{}", r);
    assert_eq!(r.values["components"], 31);
    assert_eq!(r.values["component_dim"], 8);
    // the Z2⁵-grading of F4 has a 4-dimensional zero-free but unequal component pattern
    let f4 = induced_grading(Target::F4, &pc, None).unwrap();
    assert!(!jordan_grading_check(&f4, JordanKind::Plain).unwrap().passed);
    // a non-grading is refused
    let bad = Grading::from_coords(o.algebra.clone(), AbelianGroup::free(1), &(0..8).map(|i| vec![i]).collect::<Vec<_>>()).unwrap();
    assert_eq!(jordan_grading_check(&bad, JordanKind::Plain), Err(ForgeError::Unverified));
}
