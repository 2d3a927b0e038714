mod common;

use nclattice_core::ktheory::{
    cone_membership, describe_cone, first_nonnegative_power, ConeKind, UnipotentCone,
};
use nclattice_core::{
    fixtures, integer_inverse, stable_incidence, unipotent_cone, Certificate, IncidenceMatrix,
    IntMatrix, MembershipVerdict, Poset,
};
use proptest::prelude::*;

fn stable(p: &Poset) -> IncidenceMatrix {
    stable_incidence(&common::diagram(p)).unwrap()
}

fn symbolic(t: &IncidenceMatrix) -> UnipotentCone {
    match unipotent_cone(t).unwrap().kind {
        ConeKind::UnipotentSymbolic(u) => u,
        _ => unreachable!(),
    }
}

fn vector(k: usize, range: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-range..=range, k)
}

fn poset_and_vector(max: usize, range: i64) -> impl Strategy<Value = (Poset, Vec<i64>)> {
    common::poset(max).prop_flat_map(move |p| {
        let k = p.len();
        (Just(p), vector(k, range))
    })
}

fn poset_and_two_vectors(max: usize, range: i64) -> impl Strategy<Value = (Poset, Vec<i64>, Vec<i64>)> {
    common::poset(max).prop_flat_map(move |p| {
        let k = p.len();
        (Just(p), vector(k, range), vector(k, range))
    })
}

/// Reference coordinate order for the sphere, and `T^{-m}` in closed form.
const SPHERE_ORDER: [&str; 6] = ["x5", "x3", "x1", "x2", "x4", "x6"];

fn sphere_closed_form(v: &[i64], m: i64) -> Vec<i64> {
    let (a, b, c, d, e, f) = (v[0], v[1], v[2], v[3], v[4], v[5]);
    vec![
        a,
        b - m * (a + f),
        c + m * m * (a + f) - m * (b + e),
        d + m * m * (a + f) - m * (b + e),
        e - m * (a + f),
        f,
    ]
}

#[test]
fn sphere_inverse_powers_match_closed_form() {
    let t = stable(&fixtures::sphere());
    let perm: Vec<usize> = t
        .labels()
        .iter()
        .map(|l| SPHERE_ORDER.iter().position(|o| o == l).unwrap())
        .collect();
    let t = t.permuted(&perm).unwrap();
    let inv = integer_inverse(t.matrix()).unwrap();
    let vs = [
        vec![1, 0, 0, 0, 0, 0],
        vec![0, 1, 0, 0, 0, 0],
        vec![0, 0, 0, 0, 1, 0],
        vec![0, 0, 0, 0, 0, 1],
        vec![3, -2, 5, 7, 1, -4],
    ];
    for v in &vs {
        let mut w = v.clone();
        for m in 1..=10 {
            w = inv.mul_vec(&w).unwrap();
            assert_eq!(w, sphere_closed_form(v, m), "v = {v:?}, m = {m}");
        }
    }
}

#[test]
fn iterative_only_for_permutations() {
    // a 2-cycle is neither unipotent nor primitive
    let t = IncidenceMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap();
    let cone = describe_cone(&t, 1e-12, 16).unwrap();
    assert_eq!(cone.kind_name(), "iterative-only");
    assert_eq!(cone.verdict(&[1, -1], 16).unwrap(), MembershipVerdict::Unknown { m_max: 16 });
    assert_eq!(cone.verdict(&[1, 0], 16).unwrap(), MembershipVerdict::InCone { m: 0 });
}

#[test]
fn penrose_boundary_band_falls_back_to_iteration() {
    let pen = fixtures::penrose();
    assert_eq!(cone_membership(&pen, &[0, 0], 0).unwrap(), MembershipVerdict::InCone { m: 0 });
}

proptest! {
    #[test]
    fn symbolic_cone_agrees_with_iteration((p, v) in poset_and_vector(5, 2)) {
        let t = stable(&p);
        let cone = symbolic(&t);
        let symbolic_in = cone.contains(&v);
        prop_assert_eq!(cone.contains_by_clauses(&v), symbolic_in);
        // entries of T^m v are polynomials of degree < 5 with coefficients
        // bounded by |v|_1 times path counts, so a few thousand steps suffice
        let hit = first_nonnegative_power(&t, &v, 4000).unwrap();
        prop_assert_eq!(hit.is_some(), symbolic_in);
    }

    #[test]
    fn closed_form_powers_match_iteration((p, v) in poset_and_vector(7, 5), m in 0u64..12) {
        let t = stable(&p);
        let cone = symbolic(&t);
        let mut w = v.clone();
        for _ in 0..m {
            w = t.matrix().mul_vec(&w).unwrap();
        }
        prop_assert_eq!(cone.evaluate(&v, m).unwrap(), w);
    }

    #[test]
    fn verdict_certificates_are_sound((p, v) in poset_and_vector(7, 5)) {
        let t = stable(&p);
        match cone_membership(&t, &v, 64).unwrap() {
            MembershipVerdict::InCone { m } => {
                let mut w = v.clone();
                for _ in 0..m {
                    w = t.matrix().mul_vec(&w).unwrap();
                }
                prop_assert!(w.iter().all(|&x| x >= 0));
                if m > 0 {
                    prop_assert_eq!(first_nonnegative_power(&t, &v, m - 1).unwrap(), None);
                }
            }
            MembershipVerdict::NotInCone(cert) => {
                prop_assert_eq!(cert, Certificate::Symbolic);
                prop_assert!(!symbolic(&t).contains(&v));
            }
            MembershipVerdict::Unknown { .. } => prop_assert!(symbolic(&t).contains(&v)),
        }
    }

    #[test]
    fn nonnegative_iterates_stay_nonnegative((p, v) in poset_and_vector(7, 4)) {
        let t = stable(&p);
        if let Some(m) = first_nonnegative_power(&t, &v, 64).unwrap() {
            let mut w = v.clone();
            for step in 0..m + 10 {
                if step >= m {
                    prop_assert!(w.iter().all(|&x| x >= 0));
                }
                w = t.matrix().mul_vec(&w).unwrap();
            }
        }
    }

    #[test]
    fn cone_is_a_pointed_monoid((p, v, w) in poset_and_two_vectors(7, 4)) {
        let t = stable(&p);
        let cone = symbolic(&t);
        let sum: Vec<i64> = v.iter().zip(&w).map(|(a, b)| a + b).collect();
        if cone.contains(&v) && cone.contains(&w) {
            prop_assert!(cone.contains(&sum));
        }
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        if cone.contains(&v) && cone.contains(&neg) {
            prop_assert!(v.iter().all(|&x| x == 0));
        }
        let abs: Vec<i64> = v.iter().map(|x| x.abs()).collect();
        prop_assert!(cone.contains(&abs));
    }

    #[test]
    fn inverse_is_exact(p in common::poset(7)) {
        let t = stable(&p);
        let inv = integer_inverse(t.matrix()).unwrap();
        prop_assert_eq!(t.matrix().mul(&inv).unwrap(), IntMatrix::identity(t.k()));
        prop_assert_eq!(inv.mul(t.matrix()).unwrap(), IntMatrix::identity(t.k()));
    }

    #[test]
    fn perron_sign_is_a_certificate(a in -60i64..=60, b in -60i64..=60) {
        let pen = fixtures::penrose();
        let cone = describe_cone(&pen, 1e-12, 64).unwrap();
        let ConeKind::PerronHalfspace(h) = &cone.kind else { unreachable!() };
        let hit = first_nonnegative_power(&pen, &[a, b], 64).unwrap();
        match h.side(&[a, b]) {
            Some(true) => prop_assert!(hit.is_some()),
            Some(false) => prop_assert!(hit.is_none()),
            None => {}
        }
    }
}
