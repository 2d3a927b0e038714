//! Scalable poset families for the benches.

use nclattice_core::Poset;

/// Circle approximation with `2n` points: minima `a_i`, maxima `b_i`,
/// `a_i < b_i` and `a_i < b_{i+1}` (indices mod `n`). `n = 2` is the
/// four-point circle.
pub fn circle(n: usize) -> Poset {
    assert!(n >= 2);
    let a = |i: usize| format!("a{:03}", i % n);
    let b = |i: usize| format!("b{:03}", i % n);
    let labels: Vec<String> = (0..n).map(a).chain((0..n).map(b)).collect();
    let pairs: Vec<(String, String)> = (0..n)
        .flat_map(|i| [(a(i), b(i)), (a(i), b(i + 1))])
        .collect();
    Poset::from_pairs(labels, &pairs).expect("circle is a poset")
}

/// `k` rounds of suspension of the two-point discrete space: two new
/// incomparable maxima above everything each round. `k = 2` is the six-point
/// sphere.
pub fn sphere(k: usize) -> Poset {
    let mut labels: Vec<String> = vec!["s0_0".into(), "s0_1".into()];
    let mut pairs = Vec::new();
    for r in 1..=k {
        let new = [format!("s{r}_0"), format!("s{r}_1")];
        for old in &labels {
            for top in &new {
                pairs.push((old.clone(), top.clone()));
            }
        }
        labels.extend(new);
    }
    Poset::from_pairs(labels, &pairs).expect("suspension is a poset")
}

/// Total order on `n` points.
pub fn chain(n: usize) -> Poset {
    let labels: Vec<String> = (0..n).map(|i| format!("c{i:03}")).collect();
    let pairs: Vec<(String, String)> = labels.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
    Poset::from_pairs(labels, &pairs).expect("chain is a poset")
}

#[cfg(test)]
mod tests {
    use super::*;
    use nclattice_core::{fixtures, iso};

    #[test]
    fn small_members_are_the_fixtures() {
        assert!(iso::is_isomorphic(&circle(2), &fixtures::circle()));
        assert!(iso::is_isomorphic(&sphere(2), &fixtures::sphere()));
        assert_eq!(chain(5).closed_sets().len(), 5);
    }
}
