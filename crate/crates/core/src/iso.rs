//! Order isomorphism of finite posets by canonical labeling.
//!
//! Colors start from local invariants and are refined by the multisets of
//! colors strictly below and above each point. When refinement stalls, one
//! point of the first non-singleton cell is individualized and the search
//! branches; the canonical form is the least relabeled order matrix over all
//! leaves. Points with identical strict up- and down-sets are swapped by an
//! automorphism, so only one of them is tried per cell.

use std::collections::BTreeMap;

use crate::topology::Poset;

/// Order matrix under a canonical relabeling: bit `j` of row `i` is set iff
/// the `i`-th point is below or equal to the `j`-th.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(pub Vec<u64>);

struct Graph {
    below: Vec<Vec<usize>>,
    above: Vec<Vec<usize>>,
}

fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let ids: BTreeMap<K, usize> = {
        let mut sorted: Vec<K> = keys.to_vec();
        sorted.sort();
        sorted.dedup();
        sorted.into_iter().enumerate().map(|(i, k)| (k, i)).collect()
    };
    keys.iter().map(|k| ids[k]).collect()
}

fn class_count(colors: &[usize]) -> usize {
    colors.iter().max().map_or(0, |m| m + 1)
}

fn refine(g: &Graph, mut colors: Vec<usize>) -> Vec<usize> {
    loop {
        let keys: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..colors.len())
            .map(|x| {
                let mut lo: Vec<usize> = g.below[x].iter().map(|&y| colors[y]).collect();
                let mut hi: Vec<usize> = g.above[x].iter().map(|&y| colors[y]).collect();
                lo.sort_unstable();
                hi.sort_unstable();
                (colors[x], lo, hi)
            })
            .collect();
        let next = rank(&keys);
        if class_count(&next) == class_count(&colors) {
            return next;
        }
        colors = next;
    }
}

fn leaf_form(p: &Poset, colors: &[usize]) -> (CanonicalForm, Vec<usize>) {
    let n = p.len();
    // colors are a permutation of 0..n at a leaf
    let mut at = vec![0; n];
    for x in 0..n {
        at[colors[x]] = x;
    }
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| p.leq(at[i], at[j]))
                .fold(0u64, |acc, j| acc | (1 << j))
        })
        .collect();
    (CanonicalForm(rows), colors.to_vec())
}

fn search(
    p: &Poset,
    g: &Graph,
    colors: Vec<usize>,
    best: &mut Option<(CanonicalForm, Vec<usize>)>,
) {
    let colors = refine(g, colors);
    let n = colors.len();
    if class_count(&colors) == n {
        let leaf = leaf_form(p, &colors);
        if best.as_ref().is_none_or(|b| leaf.0 < b.0) {
            *best = Some(leaf);
        }
        return;
    }
    let mut sizes = vec![0usize; n];
    for &c in &colors {
        sizes[c] += 1;
    }
    let cell = (0..n).find(|&c| sizes[c] > 1).expect("non-discrete coloring");
    let mut tried: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for v in (0..n).filter(|&x| colors[x] == cell) {
        let twin_key = (g.below[v].clone(), g.above[v].clone());
        if tried.contains(&twin_key) {
            continue;
        }
        tried.push(twin_key);
        let individualized = colors
            .iter()
            .enumerate()
            .map(|(x, &c)| 2 * c + usize::from(x != v))
            .collect();
        search(p, g, individualized, best);
    }
}

/// Canonical form and the canonical position of each point.
pub fn canonical_labeling(p: &Poset) -> (CanonicalForm, Vec<usize>) {
    let n = p.len();
    let g = Graph {
        below: (0..n)
            .map(|x| (0..n).filter(|&y| p.lt(y, x)).collect())
            .collect(),
        above: (0..n)
            .map(|x| (0..n).filter(|&y| p.lt(x, y)).collect())
            .collect(),
    };
    let covers = p.covers();
    let initial: Vec<(usize, usize, usize, usize)> = (0..n)
        .map(|x| {
            let lower = covers.iter().filter(|&&(_, b)| b == x).count();
            let upper = covers.iter().filter(|&&(a, _)| a == x).count();
            (lower, upper, p.down(x).len(), p.up(x).len())
        })
        .collect();
    let mut best = None;
    search(p, &g, rank(&initial), &mut best);
    best.unwrap_or((CanonicalForm(Vec::new()), Vec::new()))
}

pub fn canonical_form(p: &Poset) -> CanonicalForm {
    canonical_labeling(p).0
}

pub fn is_isomorphic(a: &Poset, b: &Poset) -> bool {
    a.len() == b.len() && canonical_form(a) == canonical_form(b)
}

/// An order isomorphism `a → b` as a map of point indices, if one exists.
pub fn isomorphism(a: &Poset, b: &Poset) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let (fa, pos_a) = canonical_labeling(a);
    let (fb, pos_b) = canonical_labeling(b);
    if fa != fb {
        return None;
    }
    let mut at_b = vec![0; b.len()];
    for (x, &c) in pos_b.iter().enumerate() {
        at_b[c] = x;
    }
    Some(pos_a.iter().map(|&c| at_b[c]).collect())
}
