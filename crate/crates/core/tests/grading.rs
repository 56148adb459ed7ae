use std::sync::Arc;

use forge_core::compose::{okubo, split_cayley};
use forge_core::grading::*;
use forge_core::Scalar;

fn canon(free: usize, torsion: &[i64]) -> AbelianGroup {
    AbelianGroup::new(free, torsion.to_vec()).unwrap().canonical()
}

#[test]
fn every_catalog_grading_verifies_and_is_universal() {
    let mut seen = 0;
    for k in CayleyGrading::ALL {
        let g = cayley_grading(k, &[]).unwrap();
        assert!(verify_grading(&g).passed, "cayley {}", k.name());
        let u = universal_group(&g).unwrap();
        assert_eq!(u.group.canonical(), g.group.canonical(), "cayley {}", k.name());
        assert!(verify_grading(&u.grading).passed);
        seen += 1;
    }
    for k in QuaternionGrading::ALL {
        let g = quaternion_grading(k, &[]).unwrap();
        assert!(verify_grading(&g).passed, "quaternion {}", k.name());
        assert_eq!(universal_group(&g).unwrap().group.canonical(), g.group.canonical());
        seen += 1;
    }
    for k in OkuboGrading::ALL {
        let g = okubo_grading(k, &[]).unwrap();
        assert!(verify_grading(&g).passed, "okubo {}", k.name());
        let u = universal_group(&g).unwrap();
        assert_eq!(u.group.canonical(), g.group.canonical(), "okubo {}", k.name());
        assert!(verify_grading(&u.grading).passed);
        seen += 1;
    }
    assert_eq!(seen, 22);
}

#[test]
fn catalog_with_other_parameters() {
    let w = Scalar::omega();
    let g = cayley_grading(CayleyGrading::Z2Cube, &[Scalar::int(2), w.clone(), Scalar::int(-3)]).unwrap();
    assert!(verify_grading(&g).passed);
    assert_eq!(grading_type(&g).unwrap(), vec![8]);
    let g = okubo_grading(OkuboGrading::Z3Sq, &[Scalar::int(5), w]).unwrap();
    assert!(verify_grading(&g).passed);
    assert!(matches!(okubo_grading(OkuboGrading::Z3, &[Scalar::int(1)]), Err(forge_core::ForgeError::BadParams(_))));
    assert!(matches!(cayley_grading(CayleyGrading::Z2, &vec![Scalar::zero(); 3]), Err(forge_core::ForgeError::BadParams(_))));
}

#[test]
fn named_components() {
    let g = cayley_grading(CayleyGrading::Z3, &[]).unwrap();
    let c = g.components();
    let z3 = AbelianGroup::cyclic_product(&[3]);
    assert_eq!(c[&z3.element(&[0]).unwrap()], vec![0, 1]);
    assert_eq!(c[&z3.element(&[1]).unwrap()], vec![2, 3, 4]);
    assert_eq!(c[&z3.element(&[2]).unwrap()], vec![5, 6, 7]);
    let g = cayley_grading(CayleyGrading::ZSq, &[]).unwrap();
    assert_eq!(g.components()[&AbelianGroup::free(2).element(&[1, 1]).unwrap()], vec![7]);
    let g = okubo_grading(OkuboGrading::ZSq, &[]).unwrap();
    assert_eq!(g.components()[&AbelianGroup::free(2).element(&[1, 1]).unwrap()], vec![7]);
    let g = okubo_grading(OkuboGrading::Z4, &[]).unwrap();
    assert_eq!(g.components()[&AbelianGroup::cyclic_product(&[4]).element(&[2]).unwrap()], vec![4, 7]);
    let g = okubo_grading(OkuboGrading::Z3Sq, &[]).unwrap();
    assert_eq!(g.components()[&AbelianGroup::cyclic_product(&[3, 3]).element(&[1, 0]).unwrap()], vec![0]);
    assert_eq!(grading_type(&g).unwrap(), vec![8]);
}

#[test]
fn type_tuples() {
    let t = |g: Grading| grading_type(&g).unwrap();
    assert_eq!(t(okubo_grading(OkuboGrading::Z3, &[]).unwrap()), vec![0, 1, 2]);
    assert_eq!(t(cayley_grading(CayleyGrading::Z3, &[]).unwrap()), vec![0, 1, 2]);
    assert_eq!(t(cayley_grading(CayleyGrading::Z4, &[]).unwrap()), vec![0, 4]);
    assert_eq!(t(cayley_grading(CayleyGrading::ZSq, &[]).unwrap()), vec![6, 1]);
    assert_eq!(t(okubo_grading(OkuboGrading::Dim2Z3, &[]).unwrap()), vec![2]);
    assert_eq!(format_type(&[24, 0, 1]), "(24,0,1)");
}

#[test]
fn non_group_labelling_fails() {
    let c = Arc::new(split_cayley());
    let coords: Vec<Vec<i64>> = (0..8).map(|i| vec![i]).collect();
    let g = Grading::from_coords(c, AbelianGroup::free(1), &coords).unwrap();
    let r = verify_grading(&g);
    assert!(!r.passed);
    assert!(r.witness.is_some());
    assert_eq!(grading_type(&g), Err(forge_core::ForgeError::Unverified));
    assert!(universal_group(&g).is_err());
}

#[test]
fn relabelled_okubo_degree_fails() {
    let o = Arc::new(okubo(&Scalar::one(), &Scalar::one()).unwrap());
    let g3 = AbelianGroup::cyclic_product(&[3, 3]);
    let mut coords: Vec<Vec<i64>> = forge_core::compose::OKUBO_INDEX.iter().map(|&(i, j)| vec![i, j]).collect();
    coords[0] = vec![2, 0];
    let g = Grading::from_coords(o, g3, &coords).unwrap();
    assert!(!verify_grading(&g).passed);
}

#[test]
fn five_grading_labelled_mod_ten_is_really_over_z() {
    let g = cayley_grading(CayleyGrading::Z5Grading, &[]).unwrap();
    let z10 = AbelianGroup::cyclic_product(&[10]);
    let coords: Vec<Vec<i64>> = g.degrees.iter().map(|d| vec![d.free[0]]).collect();
    let g10 = Grading::from_coords(g.algebra.clone(), z10, &coords).unwrap();
    assert!(verify_grading(&g10).passed);
    let u = universal_group(&g10).unwrap();
    assert_eq!(u.group, AbelianGroup::free(1));
    // the induced map is injective on the support
    let imgs: std::collections::BTreeSet<_> = u.map.values().collect();
    assert_eq!(imgs.len(), u.map.len());
}

#[test]
fn trivial_grading_has_trivial_universal_group() {
    let c = Arc::new(split_cayley());
    let g = Grading::from_coords(c, AbelianGroup::trivial(), &vec![vec![]; 8]).unwrap();
    assert!(verify_grading(&g).passed);
    assert!(universal_group(&g).unwrap().group.is_trivial());
    assert_eq!(grading_type(&g).unwrap(), [vec![0; 7], vec![1]].concat());
}

#[test]
fn coarsening_z3_squared_to_standard_z3() {
    let g = okubo_grading(OkuboGrading::Z3Sq, &[]).unwrap();
    let z3 = AbelianGroup::cyclic_product(&[3]);
    let hom = GroupHom::new(g.group.clone(), z3, vec![vec![0], vec![1]]).unwrap();
    let c = coarsen(&g, &hom).unwrap();
    assert_eq!(c, okubo_grading(OkuboGrading::Z3, &[]).unwrap());
    assert_eq!(coarsen(&g, &GroupHom::identity(&g.group)).unwrap(), g);
    // Z3 → Z2 has nowhere to send a generator of order 3 but 0
    let bad = GroupHom::new(AbelianGroup::cyclic_product(&[3]), AbelianGroup::cyclic_product(&[2]), vec![vec![1]]);
    assert_eq!(bad, Err(forge_core::ForgeError::IllDefinedHom));
}

#[test]
fn grading_files_round_trip() {
    for g in [
        okubo_grading(OkuboGrading::ZxZ2, &[]).unwrap(),
        cayley_grading(CayleyGrading::Z2Cube, &[]).unwrap(),
        Grading::from_coords(Arc::new(split_cayley()), AbelianGroup::trivial(), &vec![vec![]; 8]).unwrap(),
    ] {
        let text = write_grading(&g);
        let back = parse_grading(&text, g.algebra.clone()).unwrap();
        assert_eq!(back, g);
        assert_eq!(write_grading(&back), text);
    }
    assert!(parse_grading("group free=1\ndeg 0 = [1]\n", Arc::new(split_cayley())).is_err());
}

#[test]
fn canonical_group_invariants() {
    assert_eq!(canon(0, &[2, 3]), AbelianGroup::cyclic_product(&[6]));
    assert_eq!(canon(1, &[4, 2]), AbelianGroup::new(1, vec![2, 4]).unwrap());
    assert_eq!(canon(0, &[3, 3]).to_string(), "Z3^2");
    assert_eq!(AbelianGroup::new(1, vec![2]).unwrap().to_string(), "Z x Z2");
}
