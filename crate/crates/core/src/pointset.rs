use std::fmt;

/// Largest number of points a [`PointSet`] can index.
pub const MAX_POINTS: usize = 64;

/// A subset of a finite point set, stored as a bitmask over point indices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet(u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_POINTS);
        if n == MAX_POINTS {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        PointSet(1u64 << i)
    }

    pub fn from_bits(bits: u64) -> Self {
        PointSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_POINTS && self.0 & (1u64 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        PointSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        PointSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        PointSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest index in the set.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Indices in increasing order, as a vector. Lexicographic comparison of
    /// these vectors is the tie-break used when sorting families of sets.
    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = PointSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Sort order for families of sets: decreasing cardinality, then
/// lexicographic on the increasing index lists.
pub fn family_order(a: &PointSet, b: &PointSet) -> std::cmp::Ordering {
    b.len()
        .cmp(&a.len())
        .then_with(|| a.indices().cmp(&b.indices()))
}

/// All subsets `S` of `0..n` closed under `succ`: `i ∈ S` implies `succ[i] ⊆ S`.
///
/// Backtracking over indices; each decision propagates (including `i` forces
/// its successors in, excluding `i` forces its predecessors out), so only
/// consistent subsets are visited. Output order is unspecified.
pub fn closed_subsets(n: usize, succ: &[PointSet]) -> Vec<PointSet> {
    // reflexive-transitive closure so a single step propagates fully
    let mut reach: Vec<PointSet> = (0..n)
        .map(|i| succ[i].union(PointSet::singleton(i)))
        .collect();
    loop {
        let mut changed = false;
        for i in 0..n {
            let mut r = reach[i];
            for j in reach[i].iter() {
                r = r.union(reach[j]);
            }
            if r != reach[i] {
                reach[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut pred = vec![PointSet::EMPTY; n];
    for (i, r) in reach.iter().enumerate() {
        for j in r.iter() {
            pred[j].insert(i);
        }
    }

    let mut out = Vec::new();
    let mut stack = vec![(PointSet::EMPTY, PointSet::EMPTY)];
    while let Some((inside, outside)) = stack.pop() {
        let decided = inside.union(outside);
        match (0..n).find(|&i| !decided.contains(i)) {
            None => out.push(inside),
            Some(i) => {
                stack.push((inside, outside.union(pred[i])));
                stack.push((inside.union(reach[i]), outside));
            }
        }
    }
    out
}
