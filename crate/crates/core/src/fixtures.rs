//! The small posets and matrices used throughout the tests, benches and docs.

use crate::ktheory::IncidenceMatrix;
use crate::topology::{order_from_basis, GroundSpace, Poset};

fn labels(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn pairs(v: &[(&str, &str)]) -> Vec<(String, String)> {
    v.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

/// `∨`: `x1 ≺ x2`, `x1 ≺ x3`.
pub fn vee() -> Poset {
    Poset::from_pairs(
        labels(&["x1", "x2", "x3"]),
        &pairs(&[("x1", "x2"), ("x1", "x3")]),
    )
    .expect("vee is a poset")
}

/// `|/|`: `x1 ≺ x3`, `x2 ≺ x4`, `x1 ≺ x4`.
pub fn pin() -> Poset {
    Poset::from_pairs(
        labels(&["x1", "x2", "x3", "x4"]),
        &pairs(&[("x1", "x3"), ("x2", "x4"), ("x1", "x4")]),
    )
    .expect("pin is a poset")
}

/// Four-point circle `P4(S1)`, from the basis `{x1},{x2},{x1,x2,x3},{x1,x2,x4}`.
pub fn circle() -> Poset {
    order_from_basis(&labels(&["x1", "x2", "x3", "x4"]), &circle_basis())
        .expect("circle basis is T0")
}

pub fn circle_basis() -> Vec<Vec<String>> {
    vec![
        labels(&["x1"]),
        labels(&["x2"]),
        labels(&["x1", "x2", "x3"]),
        labels(&["x1", "x2", "x4"]),
    ]
}

/// Six-point sphere `P6(S2)`.
pub fn sphere() -> Poset {
    order_from_basis(
        &labels(&["x1", "x2", "x3", "x4", "x5", "x6"]),
        &sphere_basis(),
    )
    .expect("sphere basis is T0")
}

pub fn sphere_basis() -> Vec<Vec<String>> {
    vec![
        labels(&["x1"]),
        labels(&["x2"]),
        labels(&["x1", "x2", "x3"]),
        labels(&["x1", "x2", "x4"]),
        labels(&["x1", "x2", "x3", "x4", "x5"]),
        labels(&["x1", "x2", "x3", "x4", "x6"]),
    ]
}

pub fn one_point() -> Poset {
    Poset::from_pairs(labels(&["p"]), &[]).expect("one point")
}

/// Eight samples `s0..s7` around a circle covered by two overlapping arcs
/// `A = s0..s5`, `B = s4..s7,s0,s1` and the two overlap components.
pub fn circle_sample() -> GroundSpace {
    let pts: Vec<String> = (0..8).map(|i| format!("s{i}")).collect();
    GroundSpace::new(
        pts,
        vec![
            labels(&["s0", "s1", "s2", "s3", "s4", "s5"]),
            labels(&["s4", "s5", "s6", "s7", "s0", "s1"]),
            labels(&["s0", "s1"]),
            labels(&["s4", "s5"]),
        ],
    )
    .expect("circle sample covering")
}

/// The Penrose tiling inclusion `[[1,1],[1,0]]`.
pub fn penrose() -> IncidenceMatrix {
    IncidenceMatrix::from_rows(vec![vec![1, 1], vec![1, 0]]).expect("penrose matrix")
}
