#![allow(dead_code)]

use nclattice_core::bratteli::{build_diagram, default_depth};
use nclattice_core::{BratteliDiagram, PointSet, Poset};
use proptest::prelude::*;

/// Random poset on 1..=max points: a random DAG along a hidden linear order,
/// transitively closed, with identifiers shuffled against that order.
pub fn poset(max: usize) -> impl Strategy<Value = Poset> {
    (1..=max)
        .prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec(any::<bool>(), n * (n.saturating_sub(1)) / 2),
                Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
            )
        })
        .prop_map(|(n, bits, names)| {
            let labels: Vec<String> = names.iter().map(|i| format!("q{i}")).collect();
            let mut pairs = Vec::new();
            let mut b = bits.into_iter();
            for i in 0..n {
                for j in i + 1..n {
                    if b.next().unwrap() {
                        pairs.push((labels[i].clone(), labels[j].clone()));
                    }
                }
            }
            Poset::from_pairs(labels, &pairs).unwrap()
        })
}

pub fn diagram(p: &Poset) -> BratteliDiagram {
    build_diagram(p, default_depth(p)).unwrap()
}

pub fn subsets(n: usize) -> impl Iterator<Item = PointSet> {
    (0u64..1 << n).map(PointSet::from_bits)
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}
