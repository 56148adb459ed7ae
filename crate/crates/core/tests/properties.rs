use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;

use forge_core::algebra::{subalgebra_generated, Algebra};
use forge_core::compose::okubo;
use forge_core::grading::*;
use forge_core::io::{parse_algebra, write_algebra};
use forge_core::linalg::{minimal_polynomial, Coordinatizer, Echelon, IntMatrix, Matrix, SparseVec};
use forge_core::{Polynomial, Scalar};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4).prop_map(|(a, b, c, d)| &Scalar::frac(a, b) + &(&Scalar::frac(c, d) * &Scalar::omega()))
}

fn poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(scalar(), 0..=max_deg + 1).prop_map(Polynomial::new)
}

/// Small matrices with many zeros, so ranks vary.
fn matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..=3], r * c).prop_map(move |v| {
            Matrix::from_rows(v.chunks(c).map(|row| row.iter().map(|&x| Scalar::int(x)).collect()).collect())
        })
    })
}

fn square(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -2i64..=2], n * n).prop_map(move |v| {
            Matrix::from_rows(v.chunks(n).map(|row| row.iter().map(|&x| Scalar::int(x)).collect()).collect())
        })
    })
}

fn det_is_unit(m: &IntMatrix) -> bool {
    let d = m.det();
    d == BigInt::from(1) || d == BigInt::from(-1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
        prop_assert!((&x - &x).is_zero());
    }

    #[test]
    fn omega_is_a_primitive_cube_root(x in scalar()) {
        let w = Scalar::omega();
        prop_assert!((&(&(&w * &w) + &w) + &Scalar::one()).is_zero());
        prop_assert_eq!(&x * &w.pow(3), x.clone());
    }

    #[test]
    fn scalar_text_round_trip(x in scalar()) {
        let s = x.to_string();
        prop_assert_eq!(s.parse::<Scalar>().unwrap(), x);
    }

    #[test]
    fn division_with_remainder(p in poly(6), q in poly(4)) {
        prop_assume!(!q.is_zero());
        let (quo, rem) = p.div_rem(&q).unwrap();
        prop_assert_eq!(&(&q * &quo) + &rem, p);
        if let Some(dr) = rem.degree() {
            prop_assert!(dr < q.degree().unwrap());
        }
    }

    #[test]
    fn squares_are_not_squarefree(p in poly(4)) {
        prop_assume!(p.degree().is_some_and(|d| d >= 1));
        prop_assert!(!(&p * &p).is_squarefree().unwrap());
    }

    #[test]
    fn gcd_divides_both(p in poly(4), q in poly(4), r in poly(2)) {
        prop_assume!(!p.is_zero() && !r.is_zero());
        let (a, b) = (&p * &r, &q * &r);
        let g = Polynomial::gcd(&a, &b).unwrap();
        prop_assert!(g.divides(&a).unwrap() && g.divides(&b).unwrap());
        prop_assert!(r.divides(&g).unwrap());
    }

    #[test]
    fn rank_nullity(m in matrix(6)) {
        let ns = m.nullspace();
        prop_assert_eq!(m.rank() + ns.len(), m.ncols());
        for v in &ns {
            prop_assert!(m.apply(v).iter().all(Scalar::is_zero));
        }
        // sparse elimination agrees with the dense one
        let mut e = Echelon::new(m.ncols());
        for i in 0..m.nrows() {
            e.insert(&m.row_sparse(i));
        }
        prop_assert_eq!(e.rank(), m.rank());
    }

    #[test]
    fn minimal_polynomial_annihilates(m in square(6)) {
        let p = minimal_polynomial(&m.to_sparse());
        prop_assert!(m.eval_poly(&p).is_zero());
        prop_assert!(p.leading().unwrap().is_one());
        prop_assert!(p.degree().unwrap() <= m.nrows());
    }

    #[test]
    fn minimal_polynomial_is_minimal_for_diagonal(d in prop::collection::vec(-3i64..=3, 1..7)) {
        let n = d.len();
        let mut m = Matrix::zero(n, n);
        for (i, x) in d.iter().enumerate() {
            m[(i, i)] = Scalar::int(*x);
        }
        let mut distinct = d.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let mut want = Polynomial::one();
        for x in distinct {
            want = &want * &Polynomial::from_ints(&[-x, 1]);
        }
        prop_assert_eq!(minimal_polynomial(&m.to_sparse()), want);
    }

    #[test]
    fn smith_normal_form(rows in prop::collection::vec(prop::collection::vec(-6i64..=6, 3), 1..5)) {
        let m = IntMatrix::from_rows(&rows);
        let s = m.smith();
        let d = s.left.mul(&m).mul(&s.right);
        for i in 0..d.nrows() {
            for j in 0..d.ncols() {
                let want = if i == j { s.diag[i].clone() } else { BigInt::from(0) };
                prop_assert_eq!(d.get(i, j), &want);
            }
        }
        prop_assert!(det_is_unit(&s.left) && det_is_unit(&s.right));
        for w in s.diag.windows(2) {
            prop_assert!(w[0] >= BigInt::from(0));
            if w[0] != BigInt::from(0) {
                prop_assert_eq!(&w[1] % &w[0], BigInt::from(0));
            } else {
                prop_assert_eq!(&w[1], &BigInt::from(0));
            }
        }
    }

    #[test]
    fn coordinates_reconstruct(vs in prop::collection::vec(prop::collection::vec(-2i64..=2, 5), 1..6), c in prop::collection::vec(-3i64..=3, 6)) {
        let basis: Vec<SparseVec> = vs.iter().map(|v| SparseVec::from_dense(&v.iter().map(|&x| Scalar::int(x)).collect::<Vec<_>>())).collect();
        let mut co = Coordinatizer::new(5, basis.len());
        for b in &basis {
            co.push(b);
        }
        let kept = co.basis().to_vec();
        let mut v = SparseVec::new();
        for (b, k) in kept.iter().zip(&c) {
            v = v.add_scaled(b, &Scalar::int(*k));
        }
        let coords = co.coords(&v).unwrap();
        let mut back = SparseVec::new();
        for (i, x) in coords.iter() {
            back = back.add_scaled(&kept[i], x);
        }
        prop_assert_eq!(back, v);
    }

    #[test]
    fn interchange_round_trip(dim in 1usize..5, entries in prop::collection::vec((0usize..5, 0usize..5, 0usize..5, scalar()), 0..20), polar in prop::option::of(prop::collection::vec(scalar(), 15))) {
        let mut a = Algebra::new(dim, "random");
        for (i, j, k, c) in entries {
            let (i, j, k) = (i % dim, j % dim, k % dim);
            let v = a.product(i, j).add_scaled(&SparseVec::unit(k), &c);
            a.set_product(i, j, v);
        }
        if let Some(p) = polar {
            let mut m = Matrix::zero(dim, dim);
            let mut t = p.into_iter();
            for i in 0..dim {
                for j in i..dim {
                    let x = t.next().unwrap();
                    m[(i, j)] = x.clone();
                    m[(j, i)] = x;
                }
            }
            if !m.is_zero() {
                a.set_polar(m);
            }
        }
        let text = write_algebra(&a);
        let back = parse_algebra(&text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(write_algebra(&back), text);
    }

    #[test]
    fn subalgebra_generated_is_idempotent(v in prop::collection::vec(-2i64..=2, 8)) {
        let o = okubo(&Scalar::one(), &Scalar::int(2)).unwrap();
        let x = SparseVec::from_dense(&v.iter().map(|&x| Scalar::int(x)).collect::<Vec<_>>());
        let s = subalgebra_generated(&o, &[x]);
        let again = subalgebra_generated(&o, &s);
        prop_assert_eq!(again.len(), s.len());
        let c = Coordinatizer::from_basis(8, &s);
        prop_assert!(again.iter().all(|v| c.contains(v)));
    }

    #[test]
    fn coarsening_preserves_gradings(images in prop::collection::vec(prop::collection::vec(0i64..3, 1), 2)) {
        let g = okubo_grading(OkuboGrading::Z3Sq, &[]).unwrap();
        let hom = GroupHom::new(g.group.clone(), AbelianGroup::cyclic_product(&[3]), images).unwrap();
        let c = coarsen(&g, &hom).unwrap();
        prop_assert!(verify_grading(&c).passed);
    }

    #[test]
    fn coarsening_to_free_group_rejects_torsion(images in prop::collection::vec(prop::collection::vec(1i64..3, 1), 2)) {
        let g = okubo_grading(OkuboGrading::Z3Sq, &[]).unwrap();
        prop_assert!(GroupHom::new(g.group.clone(), AbelianGroup::free(1), images).is_err());
    }
}

#[test]
fn type_tuples_account_for_every_nonzero_component() {
    let mut all = Vec::new();
    for k in CayleyGrading::ALL {
        all.push(cayley_grading(k, &[]).unwrap());
    }
    for k in OkuboGrading::ALL {
        all.push(okubo_grading(k, &[]).unwrap());
    }
    for k in QuaternionGrading::ALL {
        all.push(quaternion_grading(k, &[]).unwrap());
    }
    for g in all {
        let t = grading_type(&g).unwrap();
        let weighted: usize = t.iter().enumerate().map(|(i, h)| (i + 1) * h).sum();
        let nonzero: usize = g.components().values().map(Vec::len).sum();
        assert_eq!(weighted, nonzero);
        assert_eq!(t.iter().sum::<usize>(), g.components().len());
    }
}

#[test]
fn grading_text_round_trip() {
    let g = okubo_grading(OkuboGrading::ZxZ2, &[]).unwrap();
    let text = write_grading(&g);
    let back = parse_grading(&text, g.algebra.clone()).unwrap();
    assert_eq!(write_grading(&back), text);
    assert!(parse_grading("group free=0 torsion=3\ndeg 0 = [1]\n", Arc::new(Algebra::new(2, "x"))).is_err());
}

#[test]
fn interchange_rejects_malformed_input() {
    for bad in [
        "",
        "dim x over Q(w)",
        "dim 2 over Q(w)\n0 2 -> 1:1",
        "dim 2 over Q(w)\n0 0 -> 1:1\n0 0 -> 0:1",
        "dim 2 over Q(w)\n0 0 -> 1",
        "dim 2 over Q(w)\npolar 1 0 1",
        "dim 2 over Q(w)\npolar 0 1 0",
        "dim 2 over Q(w)\n0 0 -> 1:q",
    ] {
        assert!(parse_algebra(bad).is_err(), "{:?}", bad);
    }
    let a = parse_algebra("dim 2 over Q(w)\n# name: demo\n0 1 -> 0:1/2,1:-1+2*w\n").unwrap();
    assert_eq!(a.name(), "demo");
    assert_eq!(a.product(0, 1).get(1), &Scalar::int(-1) + &(&Scalar::int(2) * &Scalar::omega()));
    assert!(!a.has_form());
}
