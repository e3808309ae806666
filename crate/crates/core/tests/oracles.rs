use std::collections::BTreeSet;

use mwg_core::catalog;
use mwg_core::drazin::{drazin, drazin_check, drazin_finite, drazin_matrix};
use mwg_core::inverse::{mwg_solve, mwg_solve_exhaustive};
use mwg_testkit::{gen, oracle};
use proptest::prelude::*;

#[test]
fn m2_f3_linear_families_equal_brute_force() {
    let ring = catalog::m2_f3();
    assert!(ring.linear_shape().is_some());
    for a in ring.elements().unwrap() {
        for m in 0..=2 {
            let linear: BTreeSet<_> = mwg_solve(&ring, &a, m).unwrap().materialize(&ring).unwrap().into_iter().collect();
            assert_eq!(linear, oracle::brute_family(&ring, &a, m), "a = {a}, m = {m}");
        }
    }
}

#[test]
fn exhaustive_families_equal_the_parametrization() {
    for (name, ring) in catalog::finite_rings() {
        for a in ring.elements().unwrap() {
            let d = drazin_finite(&ring, &a).unwrap();
            for m in 0..=2 {
                let listed = mwg_solve_exhaustive(&ring, &a, m, &d).unwrap().member_set(&ring).unwrap();
                assert_eq!(listed, oracle::parametrized_family(&ring, &a, m), "{name}: a = {a}, m = {m}");
            }
        }
    }
}

#[test]
fn drazin_matches_brute_force_on_finite_rings() {
    for (name, ring) in catalog::finite_rings() {
        for a in ring.elements().unwrap() {
            let d = drazin(&ring, &a).unwrap();
            let (x, k) = oracle::brute_drazin(&ring, &a);
            assert_eq!((d.inverse, d.index), (x, k), "{name}: a = {a}");
        }
    }
}

#[test]
fn drazin_paths_agree_on_m2_f3() {
    let ring = catalog::m2_f3();
    for a in ring.elements().unwrap() {
        assert_eq!(drazin_matrix(&ring, &a).unwrap(), drazin_finite(&ring, &a).unwrap(), "a = {a}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn reported_index_is_minimal(c in gen::case()) {
        let d = drazin(&c.ring, &c.a).unwrap();
        prop_assert!(drazin_check(&c.ring, &c.a, &d.inverse, d.index).unwrap());
        if d.index >= 2 {
            prop_assert!(!drazin_check(&c.ring, &c.a, &d.inverse, d.index - 1).unwrap());
        }
    }

    #[test]
    fn matrix_families_satisfy_the_defining_equations(c in gen::case()) {
        let k = drazin(&c.ring, &c.a).unwrap().index;
        for m in 0..=2 {
            let family = mwg_solve(&c.ring, &c.a, m).unwrap();
            for x in family.samples(&c.ring, 4).unwrap() {
                prop_assert!(oracle::defining_equations(&c.ring, &c.a, &x, m, k), "a = {}, x = {x}", c.a);
            }
        }
    }
}
