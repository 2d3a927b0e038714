//! Bratteli diagram of the AF algebra whose primitive spectrum is a poset.
//!
//! Closed sets `K_1 = P, K_2, ...` are taken in a fixed order. Level `l` of
//! the diagram uses the first `l + 1` of them: its nodes are the atoms of the
//! partition they generate, and the node for atom `Y` at level `l` is joined
//! (multiplicity 1) to the node for atom `Y'` at level `l + 1` iff `Y` meets
//! the envelope of `Y'`, the smallest set of the lattice closure containing
//! `Y'`. Level 0 is the root: the single atom `P` with dimension 1.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ktheory::IncidenceMatrix;
use crate::matrix::IntMatrix;
use crate::pointset::{family_order, PointSet};
use crate::topology::Poset;

/// Partition data for one level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelPartition {
    /// Diagram level (0 is the root).
    pub level: usize,
    /// Number of closed sets `n` in the family `K_n` used at this level.
    pub family_size: usize,
    /// Atoms `Y(n, j)`, sorted by least point index.
    pub atoms: Vec<PointSet>,
    /// Envelopes `F(n, j)`, one per atom.
    pub envelopes: Vec<PointSet>,
    /// Lattice closure `K_n'`.
    pub family: Vec<PointSet>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LevelNode {
    pub dimension: u128,
    pub atom: PointSet,
}

#[derive(Debug, Clone)]
pub struct BratteliDiagram {
    poset: Poset,
    closed_sets: Vec<PointSet>,
    partitions: Vec<LevelPartition>,
    levels: Vec<Vec<LevelNode>>,
    /// `edges[l][(k, j)]`: edges from node `j` at level `l` to node `k` at level `l + 1`.
    edges: Vec<IntMatrix>,
    stable_level: Option<usize>,
}

impl BratteliDiagram {
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn closed_sets(&self) -> &[PointSet] {
        &self.closed_sets
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn levels(&self) -> &[Vec<LevelNode>] {
        &self.levels
    }

    pub fn partitions(&self) -> &[LevelPartition] {
        &self.partitions
    }

    pub fn edges(&self) -> &[IntMatrix] {
        &self.edges
    }

    pub fn dimensions(&self, level: usize) -> Vec<u128> {
        self.levels[level].iter().map(|n| n.dimension).collect()
    }

    /// First level from which the partition separates all points and the
    /// multiplicity matrices stay constant. `None` if the diagram is too
    /// shallow to tell.
    pub fn stable_level(&self) -> Option<usize> {
        self.stable_level
    }

    /// Plain-text dump: one line per level, `l: d1 d2 ... | incoming matrix rows`.
    pub fn level_dump(&self) -> String {
        let mut out = String::new();
        for (l, nodes) in self.levels.iter().enumerate() {
            let dims: Vec<String> = nodes.iter().map(|n| n.dimension.to_string()).collect();
            let rows = if l == 0 {
                String::new()
            } else {
                let m = &self.edges[l - 1];
                let rows: Vec<String> = (0..m.rows())
                    .map(|k| {
                        m.row(k)
                            .iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    })
                    .collect();
                format!(" {}", rows.join("; "))
            };
            let _ = writeln!(out, "{l}: {} |{rows}", dims.join(" "));
        }
        out
    }

    fn validate(&self) -> Result<()> {
        for (l, m) in self.edges.iter().enumerate() {
            for k in 0..m.rows() {
                let mut d: u128 = 0;
                for j in 0..m.cols() {
                    let mult = m[(k, j)];
                    if !(0..=1).contains(&mult) {
                        return Err(Error::Multiplicity {
                            level: l,
                            from: j,
                            to: k,
                            multiplicity: mult,
                        });
                    }
                    d += mult as u128 * self.levels[l][j].dimension;
                }
                if d != self.levels[l + 1][k].dimension {
                    return Err(Error::DimensionRecursion {
                        level: l + 1,
                        node: k,
                    });
                }
            }
        }
        Ok(())
    }
}

/// Smallest family containing `family` that is closed under pairwise union
/// and nonempty intersection, sorted large-first then lexicographically.
pub fn lattice_closure(family: &[PointSet]) -> Vec<PointSet> {
    let mut sets: BTreeSet<PointSet> = family.iter().copied().collect();
    let mut frontier: Vec<PointSet> = sets.iter().copied().collect();
    while !frontier.is_empty() {
        let current: Vec<PointSet> = sets.iter().copied().collect();
        let mut next = Vec::new();
        for &a in &frontier {
            for &b in &current {
                for c in [a.union(b), a.intersection(b)] {
                    if !c.is_empty() && sets.insert(c) {
                        next.push(c);
                    }
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<PointSet> = sets.into_iter().collect();
    out.sort_by(family_order);
    out
}

/// Atoms of the Boolean algebra generated by `family` inside `universe`:
/// points grouped by their membership pattern, sorted by least index.
pub fn partition_atoms(universe: PointSet, family: &[PointSet]) -> Vec<PointSet> {
    let mut classes: BTreeMap<Vec<bool>, PointSet> = BTreeMap::new();
    for x in universe.iter() {
        let sig = family.iter().map(|s| s.contains(x)).collect();
        classes.entry(sig).or_default().insert(x);
    }
    let mut atoms: Vec<PointSet> = classes.into_values().collect();
    atoms.sort_by_key(|a| a.first());
    atoms
}

/// Intersection of all members of `family` containing `atom`.
pub fn envelope(atom: PointSet, family: &[PointSet]) -> Result<PointSet> {
    family
        .iter()
        .filter(|s| atom.is_subset(**s))
        .copied()
        .reduce(PointSet::intersection)
        .ok_or_else(|| Error::NoEnvelope(format!("{atom:?}")))
}

/// Default depth: enough levels for the stable part to show up twice.
pub fn default_depth(p: &Poset) -> usize {
    p.closed_sets().len() + 2
}

fn partition_at(p: &Poset, closed: &[PointSet], level: usize) -> Result<LevelPartition> {
    let n = (level + 1).min(closed.len());
    let used = &closed[..n];
    let family = lattice_closure(used);
    let atoms = partition_atoms(p.all(), used);
    let envelopes = atoms
        .iter()
        .map(|&a| envelope(a, &family))
        .collect::<Result<Vec<_>>>()?;
    Ok(LevelPartition {
        level,
        family_size: n,
        atoms,
        envelopes,
        family,
    })
}

/// Build `depth` levels (0 through `depth - 1`) of the diagram of `p`.
pub fn build_diagram(p: &Poset, depth: usize) -> Result<BratteliDiagram> {
    if depth < 1 {
        return Err(Error::ZeroDepth);
    }
    let closed = p.closed_sets();
    let partitions = (0..depth)
        .map(|l| partition_at(p, &closed, l))
        .collect::<Result<Vec<_>>>()?;

    let mut levels: Vec<Vec<LevelNode>> = Vec::with_capacity(depth);
    levels.push(vec![LevelNode {
        dimension: 1,
        atom: partitions[0].atoms[0],
    }]);
    let mut edges = Vec::with_capacity(depth.saturating_sub(1));
    for l in 0..depth - 1 {
        let (lower, upper) = (&partitions[l], &partitions[l + 1]);
        let mut m = IntMatrix::zeros(upper.atoms.len(), lower.atoms.len());
        let mut nodes = Vec::with_capacity(upper.atoms.len());
        for (k, (&atom, &env)) in upper.atoms.iter().zip(&upper.envelopes).enumerate() {
            let mut d: u128 = 0;
            for (j, &y) in lower.atoms.iter().enumerate() {
                if y.intersects(env) {
                    m[(k, j)] = 1;
                    d = d
                        .checked_add(levels[l][j].dimension)
                        .ok_or(Error::Overflow)?;
                }
            }
            nodes.push(LevelNode { dimension: d, atom });
        }
        levels.push(nodes);
        edges.push(m);
    }

    let stable_level = detect_stable(p, &closed, &partitions, &edges);
    let d = BratteliDiagram {
        poset: p.clone(),
        closed_sets: closed,
        partitions,
        levels,
        edges,
        stable_level,
    };
    d.validate()?;
    Ok(d)
}

fn detect_stable(
    p: &Poset,
    closed: &[PointSet],
    partitions: &[LevelPartition],
    edges: &[IntMatrix],
) -> Option<usize> {
    // edges[l] is final once level l + 1 sees every closed set
    let last = partitions.len() - 1;
    if last < closed.len() {
        return None;
    }
    let separated = |l: usize| partitions[l].atoms.len() == p.len();
    let final_edges = &edges[last - 1];
    let mut s = last - 1;
    while s > 0 && separated(s - 1) && edges[s - 1] == *final_edges {
        s -= 1;
    }
    debug_assert!(separated(s));
    Some(s)
}

/// Levels required before [`stable_incidence`] succeeds on `p`.
pub fn required_depth(p: &Poset) -> usize {
    p.closed_sets().len() + 1
}

/// The constant multiplicity matrix of the stable part. Rows index level
/// `n + 1` nodes and columns level `n` nodes, both in atom order; labels are
/// the point identifiers of the (singleton) atoms.
pub fn stable_incidence(d: &BratteliDiagram) -> Result<IncidenceMatrix> {
    let s = d.stable_level.ok_or(Error::NotStable {
        levels: d.depth(),
        required: d.closed_sets.len() + 1,
    })?;
    let labels = d.partitions[s]
        .atoms
        .iter()
        .map(|a| d.poset.labels_of(*a).join("+"))
        .collect();
    IncidenceMatrix::with_labels(d.edges[s].clone(), labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(p: &Poset, labels: &[&str]) -> PointSet {
        labels.iter().map(|l| p.index_of(l).unwrap()).collect()
    }

    #[test]
    fn vee_closure_adds_union() {
        let p = fixtures::vee();
        let k3 = [set(&p, &["x1", "x2", "x3"]), set(&p, &["x2"]), set(&p, &["x3"])];
        let closure = lattice_closure(&k3);
        let got: Vec<String> = closure.iter().map(|s| p.format_set(*s)).collect();
        assert_eq!(got, vec!["{x1,x2,x3}", "{x2,x3}", "{x2}", "{x3}"]);
    }

    #[test]
    fn closure_of_closed_families() {
        let a = PointSet::from_bits(0b111);
        assert_eq!(lattice_closure(&[a]), vec![a]);
        let chain = [a, PointSet::from_bits(0b11), PointSet::from_bits(0b1)];
        assert_eq!(lattice_closure(&chain), chain.to_vec());
    }

    #[test]
    fn vee_atoms() {
        let p = fixtures::vee();
        let k2 = [p.all(), set(&p, &["x2"])];
        let atoms: Vec<String> = partition_atoms(p.all(), &k2)
            .into_iter()
            .map(|a| p.format_set(a))
            .collect();
        assert_eq!(atoms, vec!["{x1,x3}", "{x2}"]);
        assert_eq!(partition_atoms(p.all(), &[p.all()]), vec![p.all()]);
    }

    #[test]
    fn envelopes_at_stable_level() {
        let pin = fixtures::pin();
        let family = lattice_closure(&pin.closed_sets());
        let env = envelope(set(&pin, &["x1"]), &family).unwrap();
        assert_eq!(pin.format_set(env), "{x1,x3,x4}");

        let sph = fixtures::sphere();
        let family = lattice_closure(&sph.closed_sets());
        let env = envelope(set(&sph, &["x2"]), &family).unwrap();
        assert_eq!(sph.format_set(env), "{x2,x3,x4,x5,x6}");

        let member = set(&sph, &["x5"]);
        assert_eq!(envelope(member, &family).unwrap(), member);
    }

    #[test]
    fn envelope_missing() {
        let err = envelope(PointSet::from_bits(0b100), &[PointSet::from_bits(0b11)]).unwrap_err();
        assert!(matches!(err, Error::NoEnvelope(_)));
    }

    #[test]
    fn vee_dimensions() {
        let p = fixtures::vee();
        let d = build_diagram(&p, 6).unwrap();
        let sizes: Vec<usize> = d.levels().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 2, 3, 3, 3, 3]);
        // atom order is x1, x2, x3 so the big factor comes first
        assert_eq!(d.dimensions(2), vec![2, 1, 1]);
        assert_eq!(d.dimensions(5), vec![8, 1, 1]);
        assert_eq!(d.stable_level(), Some(2));
    }

    #[test]
    fn one_point_diagram() {
        let p = fixtures::one_point();
        let d = build_diagram(&p, default_depth(&p)).unwrap();
        assert!(d.levels().iter().all(|l| l.len() == 1 && l[0].dimension == 1));
        assert_eq!(d.stable_level(), Some(0));
        assert_eq!(stable_incidence(&d).unwrap().matrix().to_rows(), vec![vec![1]]);
    }

    #[test]
    fn zero_depth_rejected() {
        assert_eq!(build_diagram(&fixtures::vee(), 0).unwrap_err(), Error::ZeroDepth);
    }

    #[test]
    fn shallow_diagram_not_stable() {
        let p = fixtures::circle();
        let d = build_diagram(&p, 3).unwrap();
        assert_eq!(d.stable_level(), None);
        assert!(matches!(stable_incidence(&d), Err(Error::NotStable { .. })));
    }

    #[test]
    fn circle_stable_part() {
        let p = fixtures::circle();
        let d = build_diagram(&p, default_depth(&p)).unwrap();
        let t = stable_incidence(&d).unwrap();
        // rows/cols x1 x2 x3 x4; T[j][i] = 1 iff x_j ⪯ x_i
        assert_eq!(
            t.matrix().to_rows(),
            vec![
                vec![1, 0, 1, 1],
                vec![0, 1, 1, 1],
                vec![0, 0, 1, 0],
                vec![0, 0, 0, 1]
            ]
        );
    }

    #[test]
    fn level_dump_format() {
        let d = build_diagram(&fixtures::vee(), 4).unwrap();
        assert_eq!(
            d.level_dump(),
            "0: 1 |\n1: 1 1 | 1; 1\n2: 2 1 1 | 1 1; 0 1; 0 1\n3: 4 1 1 | 1 1 1; 0 1 0; 0 0 1\n"
        );
    }
}
