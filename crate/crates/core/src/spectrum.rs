//! Ideals of the AF algebra read off its Bratteli diagram, and the primitive
//! spectrum ordered by inclusion.
//!
//! An ideal is a set of nodes `Λ` such that
//!
//! * (forward) every edge out of a node of `Λ` lands in `Λ`;
//! * (backward) a node all of whose successors lie in `Λ` is in `Λ`.
//!
//! It is primitive when, for every level, some later node outside `Λ` is
//! reachable from every node of that level outside `Λ`.
//!
//! Everything is decided on the stable part, where the edge pattern is a
//! fixed matrix. Levels below it are recovered by backward completion. The
//! primitivity test is also exact there: a pre-stable node outside `Λ` has a
//! successor outside `Λ`, so it reaches the stable complement.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::bratteli::{stable_incidence, BratteliDiagram};
use crate::error::{Error, Result};
use crate::iso;
use crate::ktheory::bool_mul;
use crate::matrix::IntMatrix;
use crate::pointset::{closed_subsets, PointSet};
use crate::topology::Poset;

/// One ideal of the algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSubdiagram {
    /// Stable node indices in the ideal; the pattern repeats at every level
    /// from `stable_level` on.
    pub selected: PointSet,
    pub stable_level: usize,
    /// Node selections at levels `0..=stable_level`.
    pub levels: Vec<PointSet>,
}

impl IdealSubdiagram {
    pub fn is_zero(&self) -> bool {
        self.selected.is_empty()
    }

    pub fn is_whole(&self, stable_nodes: usize) -> bool {
        self.selected == PointSet::full(stable_nodes)
    }
}

#[derive(Debug, Clone)]
pub struct PrimSpectrum {
    /// Primitive ideals in canonical order.
    pub ideals: Vec<IdealSubdiagram>,
    /// `order[i][j]` iff ideal `i` is contained in ideal `j`.
    pub order: Vec<Vec<bool>>,
    pub poset: Poset,
}

/// `succ[i]` = columns-to-rows adjacency of a stable matrix: the nodes one
/// level up that node `i` feeds into.
pub(crate) fn successors(t: &IntMatrix) -> Vec<PointSet> {
    (0..t.cols())
        .map(|i| (0..t.rows()).filter(|&j| t[(j, i)] != 0).collect())
        .collect()
}

fn backward_complete(succ: &[PointSet], set: PointSet) -> bool {
    succ.iter()
        .enumerate()
        .all(|(i, s)| !s.is_subset(set) || set.contains(i))
}

/// Increasing size, then lexicographic on indices.
fn selection_order(a: &PointSet, b: &PointSet) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.indices().cmp(&b.indices()))
}

/// All node sets of a stationary diagram with matrix `t` satisfying both
/// ideal conditions, zero ideal first and whole set last.
pub fn stable_ideals(t: &IntMatrix) -> Vec<PointSet> {
    let succ = successors(t);
    let mut out: Vec<PointSet> = closed_subsets(succ.len(), &succ)
        .into_iter()
        .filter(|&s| backward_complete(&succ, s))
        .collect();
    out.sort_by(selection_order);
    out
}

/// Condition on a stationary diagram: the complement of `selected` has a
/// node reachable by paths of one common length from all of its nodes.
pub fn complement_has_common_target(t: &IntMatrix, selected: PointSet) -> bool {
    let k = t.cols();
    let outside: Vec<usize> = (0..k).filter(|&i| !selected.contains(i)).collect();
    if outside.is_empty() {
        return false;
    }
    let c = outside.len();
    // step[a][b]: edge from outside[a] to outside[b]
    let step: Vec<Vec<bool>> = outside
        .iter()
        .map(|&i| outside.iter().map(|&j| t[(j, i)] != 0).collect())
        .collect();
    let mut reach: Vec<Vec<bool>> = (0..c).map(|a| (0..c).map(|b| a == b).collect()).collect();
    let mut seen = HashSet::new();
    loop {
        if (0..c).any(|b| (0..c).all(|a| reach[a][b])) {
            return true;
        }
        if !seen.insert(reach.clone()) {
            return false;
        }
        reach = bool_mul(&reach, &step);
    }
}

fn stable_matrix(d: &BratteliDiagram) -> Result<(usize, IntMatrix)> {
    let t = stable_incidence(d)?;
    let s = d.stable_level().expect("stable incidence implies a stable level");
    Ok((s, t.matrix().clone()))
}

fn lift(d: &BratteliDiagram, s: usize, selected: PointSet) -> IdealSubdiagram {
    let mut levels = vec![PointSet::EMPTY; s + 1];
    levels[s] = selected;
    for l in (0..s).rev() {
        let succ = successors(&d.edges()[l]);
        levels[l] = (0..succ.len())
            .filter(|&i| succ[i].is_subset(levels[l + 1]))
            .collect();
    }
    IdealSubdiagram {
        selected,
        stable_level: s,
        levels,
    }
}

/// Every ideal, from the zero ideal to the whole algebra.
pub fn ideal_subdiagrams(d: &BratteliDiagram) -> Result<Vec<IdealSubdiagram>> {
    let (s, t) = stable_matrix(d)?;
    Ok(stable_ideals(&t)
        .into_iter()
        .map(|sel| lift(d, s, sel))
        .collect())
}

/// Ideals other than the zero ideal and the whole algebra.
pub fn nontrivial_ideals(d: &BratteliDiagram) -> Result<Vec<IdealSubdiagram>> {
    let k = d.levels()[d.stable_level().unwrap_or(0)].len();
    Ok(ideal_subdiagrams(d)?
        .into_iter()
        .filter(|i| !i.is_zero() && !i.is_whole(k))
        .collect())
}

pub fn is_primitive(ideal: &IdealSubdiagram, d: &BratteliDiagram) -> Result<bool> {
    let (_, t) = stable_matrix(d)?;
    Ok(complement_has_common_target(&t, ideal.selected))
}

/// Whether `{0}` is primitive: some stable node is reachable from all.
pub fn zero_ideal_primitive(d: &BratteliDiagram) -> Result<bool> {
    let (_, t) = stable_matrix(d)?;
    Ok(complement_has_common_target(&t, PointSet::EMPTY))
}

fn ideal_label(d: &BratteliDiagram, s: usize, selected: PointSet) -> String {
    if selected.is_empty() {
        return "0".to_string();
    }
    let nodes = &d.partitions()[s].atoms;
    selected
        .iter()
        .map(|i| d.poset().labels_of(nodes[i]).join("+"))
        .collect::<Vec<_>>()
        .join("+")
}

/// Primitive ideals ordered by inclusion.
pub fn prim_poset(d: &BratteliDiagram) -> Result<PrimSpectrum> {
    let (s, t) = stable_matrix(d)?;
    let ideals: Vec<IdealSubdiagram> = stable_ideals(&t)
        .into_iter()
        .filter(|&sel| complement_has_common_target(&t, sel))
        .map(|sel| lift(d, s, sel))
        .collect();
    let order: Vec<Vec<bool>> = ideals
        .iter()
        .map(|a| ideals.iter().map(|b| a.selected.is_subset(b.selected)).collect())
        .collect();
    let labels = ideals.iter().map(|i| ideal_label(d, s, i.selected)).collect();
    let poset = Poset::from_leq(labels, &order)?;
    Ok(PrimSpectrum {
        ideals,
        order,
        poset,
    })
}

/// Build the diagram of `p`, read back its primitive spectrum, and compare
/// with `p` up to order isomorphism.
pub fn roundtrip_check(p: &Poset) -> Result<bool> {
    let d = crate::bratteli::build_diagram(p, crate::bratteli::default_depth(p))?;
    let prim = prim_poset(&d)?;
    Ok(iso::is_isomorphic(&prim.poset, p))
}

/// One line per ideal: selected stable nodes and primitivity.
pub fn report(d: &BratteliDiagram) -> Result<String> {
    let (s, t) = stable_matrix(d)?;
    let nodes = &d.partitions()[s].atoms;
    let k = nodes.len();
    let names: Vec<String> = nodes
        .iter()
        .map(|a| d.poset().labels_of(*a).join("+"))
        .collect();
    let mut out = String::new();
    let _ = writeln!(out, "# stable level {s}, nodes: {}", names.join(" "));
    for sel in stable_ideals(&t) {
        let set: Vec<&str> = sel.iter().map(|i| names[i].as_str()).collect();
        let prim = complement_has_common_target(&t, sel);
        let note = if sel.is_empty() {
            "  # zero ideal"
        } else if sel == PointSet::full(k) {
            "  # whole algebra"
        } else {
            ""
        };
        let _ = writeln!(
            out,
            "ideal {{{}}} primitive {}{note}",
            set.join(","),
            if prim { "yes" } else { "no" }
        );
    }
    Ok(out)
}

/// Ideals of a stationary diagram given by its matrix, with primitivity flags.
pub fn ideals_of_matrix(t: &IntMatrix) -> Result<Vec<(PointSet, bool)>> {
    if !t.is_square() {
        return Err(Error::NotSquare {
            rows: t.rows(),
            cols: t.cols(),
        });
    }
    Ok(stable_ideals(t)
        .into_iter()
        .map(|s| (s, complement_has_common_target(t, s)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bratteli::{build_diagram, default_depth};
    use crate::fixtures;

    fn diagram(p: &Poset) -> BratteliDiagram {
        build_diagram(p, default_depth(p)).unwrap()
    }

    fn names(d: &BratteliDiagram, sel: PointSet) -> String {
        ideal_label(d, d.stable_level().unwrap(), sel)
    }

    #[test]
    fn vee_ideals() {
        let d = diagram(&fixtures::vee());
        let all = ideal_subdiagrams(&d).unwrap();
        let got: Vec<String> = all.iter().map(|i| names(&d, i.selected)).collect();
        assert_eq!(got, vec!["0", "x1", "x1+x2", "x1+x3", "x1+x2+x3"]);
        let prim: Vec<bool> = all.iter().map(|i| is_primitive(i, &d).unwrap()).collect();
        assert_eq!(prim, vec![true, false, true, true, false]);
        assert_eq!(nontrivial_ideals(&d).unwrap().len(), 3);
    }

    #[test]
    fn pre_stable_levels_by_backward_completion() {
        let d = diagram(&fixtures::vee());
        let all = ideal_subdiagrams(&d).unwrap();
        for ideal in &all {
            assert_eq!(ideal.levels.len(), ideal.stable_level + 1);
            for l in 0..ideal.stable_level {
                let succ = successors(&d.edges()[l]);
                for (i, s) in succ.iter().enumerate() {
                    let inside = ideal.levels[l].contains(i);
                    assert_eq!(inside, s.is_subset(ideal.levels[l + 1]));
                }
            }
        }
        // root is in the ideal only for the whole algebra
        let roots: Vec<bool> = all.iter().map(|i| i.levels[0].contains(0)).collect();
        assert_eq!(roots, vec![false, false, false, false, true]);
    }

    #[test]
    fn zero_ideal() {
        assert!(zero_ideal_primitive(&diagram(&fixtures::vee())).unwrap());
        assert!(!zero_ideal_primitive(&diagram(&fixtures::pin())).unwrap());
        assert!(!zero_ideal_primitive(&diagram(&fixtures::circle())).unwrap());
        assert!(!zero_ideal_primitive(&diagram(&fixtures::sphere())).unwrap());
        assert!(zero_ideal_primitive(&diagram(&fixtures::one_point())).unwrap());
    }

    #[test]
    fn one_point() {
        let d = diagram(&fixtures::one_point());
        let all = ideal_subdiagrams(&d).unwrap();
        assert_eq!(all.len(), 2);
        let prim = prim_poset(&d).unwrap();
        assert_eq!(prim.poset.points(), &["0".to_string()]);
    }

    #[test]
    fn vee_prim_poset() {
        let prim = prim_poset(&diagram(&fixtures::vee())).unwrap();
        assert_eq!(prim.poset.points(), &["0", "x1+x2", "x1+x3"]);
        let zero = prim.poset.index_of("0").unwrap();
        assert_eq!(prim.poset.up(zero).len(), 3);
    }

    #[test]
    fn fixtures_roundtrip() {
        for p in [
            fixtures::vee(),
            fixtures::pin(),
            fixtures::circle(),
            fixtures::sphere(),
            fixtures::one_point(),
        ] {
            assert!(roundtrip_check(&p).unwrap());
        }
    }

    #[test]
    fn whole_algebra_never_primitive() {
        let t = IntMatrix::identity(3);
        assert!(!complement_has_common_target(&t, PointSet::full(3)));
    }

    #[test]
    fn exact_length_paths() {
        // 2-cycle without loops: common target needs equal path lengths,
        // and every power is a permutation, so there is none
        let t = IntMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]);
        assert!(!complement_has_common_target(&t, PointSet::EMPTY));
        let pen = IntMatrix::from_rows(vec![vec![1, 1], vec![1, 0]]);
        assert!(complement_has_common_target(&pen, PointSet::EMPTY));
    }

    #[test]
    fn report_lines() {
        let text = report(&diagram(&fixtures::vee())).unwrap();
        assert!(text.contains("ideal {} primitive yes  # zero ideal"), "{text}");
        assert!(text.contains("ideal {x1} primitive no\n"), "{text}");
        assert!(text.contains("ideal {x1,x2,x3} primitive no  # whole algebra"), "{text}");
    }
}
