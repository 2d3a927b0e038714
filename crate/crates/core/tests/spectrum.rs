mod common;

use nclattice_core::spectrum::{
    ideal_subdiagrams, is_primitive, nontrivial_ideals, prim_poset, zero_ideal_primitive,
};
use nclattice_core::{fixtures, iso, stable_incidence, PointSet};
use proptest::prelude::*;

#[test]
fn pin_ideals_by_brute_force() {
    let d = common::diagram(&fixtures::pin());
    let t = stable_incidence(&d).unwrap();
    let m = t.matrix();
    let brute: Vec<PointSet> = common::subsets(4)
        .filter(|&s| {
            (0..4).all(|i| {
                let succ: PointSet = (0..4).filter(|&j| m[(j, i)] != 0).collect();
                (!s.contains(i) || succ.is_subset(s)) && (!succ.is_subset(s) || s.contains(i))
            })
        })
        .collect();
    let mut got: Vec<PointSet> = ideal_subdiagrams(&d).unwrap().iter().map(|i| i.selected).collect();
    got.sort_by_key(|s| s.bits());
    assert_eq!(got, brute);
    // x1 < x3, x2 < x4, x1 < x4: down-sets other than the empty and full set
    assert_eq!(nontrivial_ideals(&d).unwrap().len(), got.len() - 2);
    assert_eq!(got.len(), 8);
}

#[test]
fn pin_zero_ideal_not_primitive() {
    let d = common::diagram(&fixtures::pin());
    assert!(!zero_ideal_primitive(&d).unwrap());
    assert_eq!(prim_poset(&d).unwrap().poset.len(), 4);
}

#[test]
fn sphere_prim_is_sphere() {
    let p = fixtures::sphere();
    let prim = prim_poset(&common::diagram(&p)).unwrap();
    assert!(iso::is_isomorphic(&prim.poset, &p));
}

proptest! {
    #[test]
    fn ideals_satisfy_both_conditions_and_are_complete(p in common::poset(7)) {
        let d = common::diagram(&p);
        let t = stable_incidence(&d).unwrap();
        let k = t.k();
        let succ: Vec<PointSet> = (0..k)
            .map(|i| (0..k).filter(|&j| t.matrix()[(j, i)] != 0).collect())
            .collect();
        let ok = |s: PointSet| (0..k).all(|i| {
            (!s.contains(i) || succ[i].is_subset(s)) && (!succ[i].is_subset(s) || s.contains(i))
        });
        let ideals = ideal_subdiagrams(&d).unwrap();
        for ideal in &ideals {
            prop_assert!(ok(ideal.selected));
        }
        let count = common::subsets(k).filter(|&s| ok(s)).count();
        prop_assert_eq!(ideals.len(), count);
        prop_assert!(ideals.first().unwrap().is_zero());
        prop_assert!(ideals.last().unwrap().is_whole(k));
        prop_assert!(!is_primitive(ideals.last().unwrap(), &d).unwrap());
        prop_assert_eq!(is_primitive(&ideals[0], &d).unwrap(), zero_ideal_primitive(&d).unwrap());
    }

    #[test]
    fn primitive_ideals_are_complements_of_closures(p in common::poset(7)) {
        // independent description: the primitive ideals of the diagram of a
        // poset are P minus the closure of a point
        let d = common::diagram(&p);
        let prim = prim_poset(&d).unwrap();
        let mut got: Vec<PointSet> = prim.ideals.iter().map(|i| i.selected).collect();
        let mut expected: Vec<PointSet> = (0..p.len()).map(|x| p.all().difference(p.up(x))).collect();
        got.sort_by_key(|s| s.bits());
        expected.sort_by_key(|s| s.bits());
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn prim_poset_round_trip(p in common::poset(7)) {
        let prim = prim_poset(&common::diagram(&p)).unwrap();
        prop_assert_eq!(prim.poset.len(), p.len());
        prop_assert!(iso::is_isomorphic(&prim.poset, &p));
        // zero ideal, when primitive, is the unique minimum
        if let Some(z) = prim.ideals.iter().position(|i| i.is_zero()) {
            for j in 0..prim.ideals.len() {
                prop_assert!(prim.order[z][j]);
            }
        }
    }

    #[test]
    fn zero_ideal_primitive_iff_minimum(p in common::poset(7)) {
        let has_min = (0..p.len()).any(|x| p.up(x) == p.all());
        prop_assert_eq!(zero_ideal_primitive(&common::diagram(&p)).unwrap(), has_min);
    }
}
