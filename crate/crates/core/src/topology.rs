//! Finite T₀ spaces as posets.
//!
//! Open sets are down-sets of the specialization order (`x ⪯ y` iff every
//! open set containing `y` contains `x`), closed sets are up-sets. The
//! smallest open set around `x` is `O_x = {y : y ⪯ x}`.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::pointset::{closed_subsets, family_order, PointSet, MAX_POINTS};

/// A sample of a space together with a covering by (open) subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundSpace {
    points: Vec<String>,
    cover: Vec<Vec<String>>,
}

impl GroundSpace {
    pub fn new(points: Vec<String>, cover: Vec<Vec<String>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptySpace);
        }
        let mut seen = HashSet::new();
        for p in &points {
            if !seen.insert(p.as_str()) {
                return Err(Error::DuplicatePoint(p.clone()));
            }
        }
        let mut covered = HashSet::new();
        for set in &cover {
            for p in set {
                if !seen.contains(p.as_str()) {
                    return Err(Error::UnknownPoint(p.clone()));
                }
                covered.insert(p.as_str());
            }
        }
        if let Some(p) = points.iter().find(|p| !covered.contains(p.as_str())) {
            return Err(Error::UncoveredPoint(p.clone()));
        }
        Ok(GroundSpace { points, cover })
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn cover(&self) -> &[Vec<String>] {
        &self.cover
    }

    /// Identify points no cover set can tell apart and order the classes by
    /// specialization in the quotient topology.
    pub fn quotient(&self) -> Result<Quotient> {
        let index: HashMap<&str, usize> = self
            .points
            .iter()
            .enumerate()
            .map(|(i, p)| (p.as_str(), i))
            .collect();
        let mut signature = vec![vec![false; self.cover.len()]; self.points.len()];
        for (s, set) in self.cover.iter().enumerate() {
            for p in set {
                signature[index[p.as_str()]][s] = true;
            }
        }

        let mut classes: BTreeMap<&[bool], Vec<&str>> = BTreeMap::new();
        for (i, sig) in signature.iter().enumerate() {
            classes.entry(sig).or_default().push(&self.points[i]);
        }
        if classes.len() > MAX_POINTS {
            return Err(Error::TooManyPoints(classes.len()));
        }

        let mut members: Vec<(String, Vec<String>, &[bool])> = classes
            .into_iter()
            .map(|(sig, mut pts)| {
                pts.sort_unstable();
                let pts: Vec<String> = pts.into_iter().map(str::to_owned).collect();
                (pts[0].clone(), pts, sig)
            })
            .collect();
        members.sort_by(|a, b| a.0.cmp(&b.0));

        // [x] ⪯ [y] iff every cover set containing y contains x. The
        // smallest generated open set around y is the intersection of the
        // cover sets containing y, so checking the cover sets suffices.
        let n = members.len();
        let mut leq = vec![vec![false; n]; n];
        for (x, row) in leq.iter_mut().enumerate() {
            for (y, cell) in row.iter_mut().enumerate() {
                *cell = members[y]
                    .2
                    .iter()
                    .zip(members[x].2)
                    .all(|(&in_y, &in_x)| !in_y || in_x);
            }
        }
        let labels = members.iter().map(|m| m.0.clone()).collect();
        let poset = Poset::from_leq(labels, &leq)?;
        let classes = members.into_iter().map(|m| (m.0, m.1)).collect();
        Ok(Quotient { poset, classes })
    }
}

/// Result of [`GroundSpace::quotient`]: the poset and, per class label, the
/// sample points it identifies.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub poset: Poset,
    pub classes: Vec<(String, Vec<String>)>,
}

/// A finite partial order. Points are kept sorted by identifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    points: Vec<String>,
    /// `down[x] = O_x = {y : y ⪯ x}`
    down: Vec<PointSet>,
    /// `up[x] = {y : x ⪯ y}`, the closure of `{x}`
    up: Vec<PointSet>,
}

impl Poset {
    /// Build from an explicit relation, `leq[i][j]` meaning `labels[i] ⪯ labels[j]`.
    /// The relation must already be a partial order.
    pub fn from_leq(labels: Vec<String>, leq: &[Vec<bool>]) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::EmptySpace);
        }
        if n > MAX_POINTS {
            return Err(Error::TooManyPoints(n));
        }
        check_unique(&labels)?;
        for i in 0..n {
            if !leq[i][i] {
                return Err(Error::NotReflexive(labels[i].clone()));
            }
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::NotAntisymmetric(labels[i].clone(), labels[j].clone()));
                }
                if leq[i][j] {
                    if let Some(k) = (0..n).find(|&k| leq[j][k] && !leq[i][k]) {
                        return Err(Error::NotTransitive(
                            labels[i].clone(),
                            labels[j].clone(),
                            labels[k].clone(),
                        ));
                    }
                }
            }
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        let points = order.iter().map(|&i| labels[i].clone()).collect();
        let mut down = vec![PointSet::EMPTY; n];
        let mut up = vec![PointSet::EMPTY; n];
        for (x, &ox) in order.iter().enumerate() {
            for (y, &oy) in order.iter().enumerate() {
                if leq[oy][ox] {
                    down[x].insert(y);
                    up[y].insert(x);
                }
            }
        }
        Ok(Poset { points, down, up })
    }

    /// Build from generating pairs `x ⪯ y`; the reflexive-transitive closure
    /// is taken, and cycles are rejected.
    pub fn from_pairs(labels: Vec<String>, pairs: &[(String, String)]) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::EmptySpace);
        }
        if n > MAX_POINTS {
            return Err(Error::TooManyPoints(n));
        }
        check_unique(&labels)?;
        let index: HashMap<&str, usize> =
            labels.iter().enumerate().map(|(i, p)| (p.as_str(), i)).collect();
        let lookup = |p: &str| {
            index
                .get(p)
                .copied()
                .ok_or_else(|| Error::UnknownPoint(p.to_owned()))
        };
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (x, y) in pairs {
            leq[lookup(x)?][lookup(y)?] = true;
        }
        // Warshall
        #[allow(clippy::needless_range_loop)]
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        Poset::from_leq(labels, &leq)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn label(&self, i: usize) -> &str {
        &self.points[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.points.binary_search_by(|p| p.as_str().cmp(label)).ok()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.down[y].contains(x)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn all(&self) -> PointSet {
        PointSet::full(self.len())
    }

    /// `O_x = {y : y ⪯ x}`.
    pub fn down(&self, x: usize) -> PointSet {
        self.down[x]
    }

    /// `{y : x ⪯ y}`, the smallest closed set containing `x`.
    pub fn up(&self, x: usize) -> PointSet {
        self.up[x]
    }

    pub fn minimal_open_set(&self, label: &str) -> Result<PointSet> {
        let x = self
            .index_of(label)
            .ok_or_else(|| Error::UnknownPoint(label.to_owned()))?;
        Ok(self.down[x])
    }

    pub fn is_open(&self, set: PointSet) -> bool {
        set.iter().all(|x| self.down[x].is_subset(set))
    }

    pub fn is_closed(&self, set: PointSet) -> bool {
        set.iter().all(|x| self.up[x].is_subset(set))
    }

    /// Smallest closed set containing `set`.
    pub fn closure(&self, set: PointSet) -> PointSet {
        set.iter().fold(PointSet::EMPTY, |acc, x| acc.union(self.up[x]))
    }

    /// All nonempty closed sets: the whole space first, then by decreasing
    /// size, ties broken lexicographically on sorted identifiers.
    pub fn closed_sets(&self) -> Vec<PointSet> {
        let succ: Vec<PointSet> = (0..self.len())
            .map(|x| self.up[x].difference(PointSet::singleton(x)))
            .collect();
        let mut sets: Vec<PointSet> = closed_subsets(self.len(), &succ)
            .into_iter()
            .filter(|s| !s.is_empty())
            .collect();
        // the full space is the unique largest set, so it sorts first
        sets.sort_by(family_order);
        sets
    }

    /// Covering pairs `(x, y)`: `x ≺ y` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut links = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.lt(x, y) && !(0..n).any(|z| self.lt(x, z) && self.lt(z, y)) {
                    links.push((x, y));
                }
            }
        }
        links
    }

    pub fn hasse(&self) -> HasseDiagram {
        let links = self.covers();
        // a point's down-set strictly contains those below it, so sorting by
        // down-set size is a linear extension
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| self.down[x].len());
        let mut levels = vec![0usize; self.len()];
        for &y in &order {
            levels[y] = links
                .iter()
                .filter(|&&(_, top)| top == y)
                .map(|&(x, _)| levels[x] + 1)
                .max()
                .unwrap_or(0);
        }
        HasseDiagram {
            points: self.points.clone(),
            levels,
            links,
        }
    }

    /// Point labels of a set, in index (identifier) order.
    pub fn labels_of(&self, set: PointSet) -> Vec<&str> {
        set.iter().map(|i| self.points[i].as_str()).collect()
    }

    /// `{x1,x3}` style rendering.
    pub fn format_set(&self, set: PointSet) -> String {
        format!("{{{}}}", self.labels_of(set).join(","))
    }

    /// Points relabeled through `rename`; the order is carried over.
    pub fn relabeled<F: Fn(&str) -> String>(&self, rename: F) -> Result<Poset> {
        let labels: Vec<String> = self.points.iter().map(|p| rename(p)).collect();
        let leq: Vec<Vec<bool>> = (0..self.len())
            .map(|x| (0..self.len()).map(|y| self.leq(x, y)).collect())
            .collect();
        Poset::from_leq(labels, &leq)
    }
}

fn check_unique(labels: &[String]) -> Result<()> {
    let mut seen = HashSet::new();
    for p in labels {
        if !seen.insert(p.as_str()) {
            return Err(Error::DuplicatePoint(p.clone()));
        }
    }
    Ok(())
}

/// Hasse diagram: points on levels plus covering links `(lower, upper)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseDiagram {
    pub points: Vec<String>,
    /// Level of each point: the length of the longest chain below it.
    pub levels: Vec<usize>,
    pub links: Vec<(usize, usize)>,
}

impl HasseDiagram {
    pub fn level_count(&self) -> usize {
        self.levels.iter().max().map_or(0, |m| m + 1)
    }
}

pub fn quotient_by_covering(space: &GroundSpace) -> Result<Poset> {
    space.quotient().map(|q| q.poset)
}

/// Specialization order of a topology given by a basis: `x ⪯ y` iff every
/// basis set containing `y` contains `x`. Points must already be separated.
pub fn order_from_basis(points: &[String], basis: &[Vec<String>]) -> Result<Poset> {
    if points.is_empty() {
        return Err(Error::EmptySpace);
    }
    if points.len() > MAX_POINTS {
        return Err(Error::TooManyPoints(points.len()));
    }
    check_unique(points)?;
    let index: HashMap<&str, usize> =
        points.iter().enumerate().map(|(i, p)| (p.as_str(), i)).collect();
    let mut sets = Vec::with_capacity(basis.len());
    for b in basis {
        let mut s = PointSet::EMPTY;
        for p in b {
            let i = *index
                .get(p.as_str())
                .ok_or_else(|| Error::UnknownPoint(p.clone()))?;
            s.insert(i);
        }
        sets.push(s);
    }
    let n = points.len();
    let member = |x: usize| -> Vec<bool> { sets.iter().map(|s| s.contains(x)).collect() };
    let signatures: Vec<Vec<bool>> = (0..n).map(member).collect();
    for x in 0..n {
        if !signatures[x].iter().any(|&b| b) {
            return Err(Error::UncoveredPoint(points[x].clone()));
        }
        for y in x + 1..n {
            if signatures[x] == signatures[y] {
                return Err(Error::NotT0(points[x].clone(), points[y].clone()));
            }
        }
    }
    let leq: Vec<Vec<bool>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| sets.iter().all(|s| !s.contains(y) || s.contains(x)))
                .collect()
        })
        .collect();
    Poset::from_leq(points.to_vec(), &leq)
}

pub fn minimal_open_set(p: &Poset, x: &str) -> Result<PointSet> {
    p.minimal_open_set(x)
}

pub fn closed_sets(p: &Poset) -> Vec<PointSet> {
    p.closed_sets()
}

pub fn hasse(p: &Poset) -> HasseDiagram {
    p.hasse()
}
