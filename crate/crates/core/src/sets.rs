//! Ground-set arithmetic and canonical dependency sets.
//!
//! A [`DepSet`] is a sorted, duplicate-free collection of unordered 2-subsets
//! of the cyclically ordered ground set `[n] = {1,..,n}`.  All higher layers
//! (graphs, enumeration, cells) operate on these canonical values, so results
//! are independent of input order.

use crate::{Error, Result};

/// The cyclically ordered set `[n] = {1,..,n}`; the successor of `n` is `1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroundSet {
    n: usize,
}

impl GroundSet {
    pub fn new(n: usize) -> Self {
        GroundSet { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, x: usize) -> bool {
        (1..=self.n).contains(&x)
    }

    /// Elements in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    /// Cyclic successor: `n` wraps to `1`.
    pub fn cyclic_succ(&self, x: usize) -> usize {
        if x == self.n {
            1
        } else {
            x + 1
        }
    }
}

/// A canonical unordered pair `{lo, hi}` with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair {
    lo: usize,
    hi: usize,
}

impl Pair {
    /// Orders the two entries; rejects `i == j`.
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == j {
            return Err(Error::DegeneratePair { value: i });
        }
        Ok(Pair {
            lo: i.min(j),
            hi: i.max(j),
        })
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    pub fn contains(&self, x: usize) -> bool {
        self.lo == x || self.hi == x
    }

    /// The entry different from `x`; panics if `x` is not an entry.
    pub fn other(&self, x: usize) -> usize {
        if x == self.lo {
            self.hi
        } else {
            debug_assert_eq!(x, self.hi);
            self.lo
        }
    }
}

/// A set of dependent pairs on `[n]`, stored sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DepSet {
    ground: GroundSet,
    pairs: Vec<Pair>,
}

impl DepSet {
    /// Canonicalizes a raw list of pairs: entries are ordered, duplicates
    /// removed, the result sorted lexicographically by `(lo, hi)`.
    pub fn new(n: usize, raw_pairs: &[(usize, usize)]) -> Result<Self> {
        let ground = GroundSet::new(n);
        let mut pairs = Vec::with_capacity(raw_pairs.len());
        for &(i, j) in raw_pairs {
            for x in [i, j] {
                if !ground.contains(x) {
                    return Err(Error::OutOfRange { value: x, n });
                }
            }
            pairs.push(Pair::new(i, j)?);
        }
        pairs.sort_unstable();
        pairs.dedup();
        Ok(DepSet { ground, pairs })
    }

    /// The empty dependency set on `[n]` (uniform matroid).
    pub fn empty(n: usize) -> Self {
        DepSet {
            ground: GroundSet::new(n),
            pairs: Vec::new(),
        }
    }

    /// All 2-subsets of `[n]`.
    pub fn full(n: usize) -> Self {
        let mut pairs = Vec::with_capacity(n.saturating_sub(1) * n / 2);
        for i in 1..=n {
            for j in (i + 1)..=n {
                pairs.push(Pair { lo: i, hi: j });
            }
        }
        DepSet {
            ground: GroundSet::new(n),
            pairs,
        }
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.n
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn iter(&self) -> impl Iterator<Item = &Pair> {
        self.pairs.iter()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        match Pair::new(i, j) {
            Ok(p) => self.pairs.binary_search(&p).is_ok(),
            Err(_) => false,
        }
    }

    pub fn is_subset_of(&self, other: &DepSet) -> bool {
        self.ground == other.ground
            && self
                .pairs
                .iter()
                .all(|p| other.pairs.binary_search(p).is_ok())
    }

    /// Union of two dependency sets on the same ground set.
    pub fn union(&self, other: &DepSet) -> Result<DepSet> {
        if self.ground != other.ground {
            return Err(Error::MixedGroundSets(self.n(), other.n()));
        }
        let mut pairs: Vec<Pair> = self
            .pairs
            .iter()
            .chain(other.pairs.iter())
            .copied()
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        Ok(DepSet {
            ground: self.ground,
            pairs,
        })
    }

    fn from_sorted(ground: GroundSet, mut pairs: Vec<Pair>) -> DepSet {
        pairs.sort_unstable();
        pairs.dedup();
        DepSet { ground, pairs }
    }

    /// Number of pairs each element participates in.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n() + 1];
        for p in &self.pairs {
            deg[p.lo] += 1;
            deg[p.hi] += 1;
        }
        deg
    }

    /// The loops: elements paired with every other element.  The element of a
    /// one-point ground set is a loop vacuously.
    pub fn loops(&self) -> Vec<usize> {
        let n = self.n();
        let deg = self.degrees();
        (1..=n).filter(|&i| deg[i] + 1 == n).collect()
    }

    /// Elements that are not loops, in increasing order.
    pub fn non_loops(&self) -> Vec<usize> {
        let n = self.n();
        let deg = self.degrees();
        (1..=n).filter(|&i| deg[i] + 1 != n).collect()
    }

    /// The complement inside all 2-subsets of `[n]`; an involution.
    pub fn complement(&self) -> DepSet {
        let n = self.n();
        let mut pairs = Vec::with_capacity(n.saturating_sub(1) * n / 2 - self.pairs.len());
        for i in 1..=n {
            for j in (i + 1)..=n {
                let p = Pair { lo: i, hi: j };
                if self.pairs.binary_search(&p).is_err() {
                    pairs.push(p);
                }
            }
        }
        DepSet {
            ground: self.ground,
            pairs,
        }
    }

    /// Adjoins every pair incident to `t`, turning the elements of `t` into
    /// loops.
    pub fn add_vanishing(&self, t: &[usize]) -> Result<DepSet> {
        let n = self.n();
        let mut pairs = self.pairs.clone();
        for &v in t {
            if !self.ground.contains(v) {
                return Err(Error::OutOfRange { value: v, n });
            }
            for j in 1..=n {
                if j != v {
                    pairs.push(Pair {
                        lo: v.min(j),
                        hi: v.max(j),
                    });
                }
            }
        }
        Ok(DepSet::from_sorted(self.ground, pairs))
    }

    /// Completes every connected component of the non-loop graph, iterating
    /// until nothing changes.  A completion can promote vertices to loops only
    /// when a single component covers all non-loops, so the loop stabilizes
    /// after one extra pass.
    pub fn closure(&self) -> DepSet {
        let mut current = self.clone();
        loop {
            let components = current.non_loop_components();
            let mut pairs = current.pairs.clone();
            for comp in &components {
                for (a, &i) in comp.iter().enumerate() {
                    for &j in &comp[a + 1..] {
                        pairs.push(Pair { lo: i, hi: j });
                    }
                }
            }
            let next = DepSet::from_sorted(current.ground, pairs);
            if next == current {
                return next;
            }
            current = next;
        }
    }

    /// Connected components of the graph on the non-loops, each sorted, in
    /// the order used throughout: by smallest vertex under the cyclic order
    /// cut at the smallest non-loop.
    pub(crate) fn non_loop_components(&self) -> Vec<Vec<usize>> {
        let vertices = self.non_loops();
        if vertices.is_empty() {
            return Vec::new();
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        for p in &self.pairs {
            if let (Ok(a), Ok(b)) = (vertices.binary_search(&p.lo), vertices.binary_search(&p.hi)) {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        let mut seen = vec![false; vertices.len()];
        let mut components = Vec::new();
        for start in 0..vertices.len() {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(vertices[v]);
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        // The DFS sweep starts at the smallest non-loop and scans upward, so
        // components already come out ordered by their cut-cyclic minimum.
        components
    }

    /// Adjoins all pairs between `a` and `b` and takes the closure.
    pub fn connect(&self, a: &[usize], b: &[usize]) -> Result<DepSet> {
        for &v in a.iter().chain(b.iter()) {
            if !self.ground.contains(v) {
                return Err(Error::OutOfRange {
                    value: v,
                    n: self.n(),
                });
            }
        }
        if a.iter().any(|v| b.contains(v)) {
            return Err(Error::Overlap);
        }
        let mut pairs = self.pairs.clone();
        for &i in a {
            for &j in b {
                pairs.push(Pair {
                    lo: i.min(j),
                    hi: i.max(j),
                });
            }
        }
        Ok(DepSet::from_sorted(self.ground, pairs).closure())
    }

    /// Maps every pair through the permutation and re-canonicalizes.
    pub fn relabel(&self, r: &Relabeling) -> DepSet {
        debug_assert_eq!(r.n(), self.n());
        let pairs = self
            .pairs
            .iter()
            .map(|p| {
                let (a, b) = (r.apply(p.lo), r.apply(p.hi));
                Pair {
                    lo: a.min(b),
                    hi: a.max(b),
                }
            })
            .collect();
        DepSet::from_sorted(self.ground, pairs)
    }
}

impl std::fmt::Display for DepSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{{},{}}}", p.lo, p.hi)?;
        }
        write!(f, "}} on [{}]", self.n())
    }
}

/// A bijection of `[n]`, used for cyclic shifts and niceness reorderings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeling {
    image: Vec<usize>,
}

impl Relabeling {
    /// Builds a relabeling from the images `image[x-1] = r(x)`, checking that
    /// the map is a bijection of `[n]`.
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n + 1];
        for &y in &image {
            if y == 0 || y > n {
                return Err(Error::OutOfRange { value: y, n });
            }
            if seen[y] {
                return Err(Error::DegeneratePair { value: y });
            }
            seen[y] = true;
        }
        Ok(Relabeling { image })
    }

    pub fn identity(n: usize) -> Self {
        Relabeling {
            image: (1..=n).collect(),
        }
    }

    /// The shift sending `x` to `x + s` cyclically.
    pub fn cyclic_shift(n: usize, s: usize) -> Self {
        Relabeling {
            image: (1..=n).map(|x| (x - 1 + s) % n + 1).collect(),
        }
    }

    /// Relabeling that assigns new label `i` to `order[i-1]`; `order` must
    /// list every element of `[n]` once.
    pub fn from_order(order: &[usize]) -> Result<Self> {
        let n = order.len();
        let mut image = vec![0usize; n];
        for (pos, &x) in order.iter().enumerate() {
            if x == 0 || x > n {
                return Err(Error::OutOfRange { value: x, n });
            }
            if image[x - 1] != 0 {
                return Err(Error::DegeneratePair { value: x });
            }
            image[x - 1] = pos + 1;
        }
        Ok(Relabeling { image })
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x - 1]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn inverse(&self) -> Relabeling {
        let mut image = vec![0usize; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            image[y - 1] = x + 1;
        }
        Relabeling { image }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn depset(n: usize, pairs: &[(usize, usize)]) -> DepSet {
        DepSet::new(n, pairs).unwrap()
    }

    /// The two crossing triangles on [8] with 7 a loop.
    fn crossing_set() -> DepSet {
        let mut pairs = vec![(1, 2), (2, 4), (1, 4), (3, 5), (3, 6), (5, 6)];
        for i in 1..=8 {
            if i != 7 {
                pairs.push((7, i));
            }
        }
        depset(8, &pairs)
    }

    #[test]
    fn canonicalize_orders_and_dedupes() {
        let d = depset(6, &[(2, 1), (1, 2), (4, 5)]);
        assert_eq!(
            d.pairs(),
            &[Pair::new(1, 2).unwrap(), Pair::new(4, 5).unwrap()]
        );
    }

    #[test]
    fn canonicalize_empty() {
        let d = depset(6, &[]);
        assert!(d.is_empty());
        assert_eq!(d.n(), 6);
    }

    #[test]
    fn canonicalize_rejects_diagonal() {
        assert_eq!(
            DepSet::new(4, &[(1, 1)]),
            Err(Error::DegeneratePair { value: 1 })
        );
    }

    #[test]
    fn canonicalize_rejects_out_of_range() {
        assert_eq!(
            DepSet::new(4, &[(1, 5)]),
            Err(Error::OutOfRange { value: 5, n: 4 })
        );
        assert_eq!(
            DepSet::new(4, &[(0, 2)]),
            Err(Error::OutOfRange { value: 0, n: 4 })
        );
    }

    #[test]
    fn canonicalize_idempotent() {
        let d = depset(7, &[(3, 1), (5, 2), (1, 3)]);
        let again = DepSet::new(
            7,
            &d.pairs()
                .iter()
                .map(|p| (p.lo(), p.hi()))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(d, again);
    }

    #[test]
    fn loops_of_crossing_set() {
        assert_eq!(crossing_set().loops(), vec![7]);
    }

    #[test]
    fn loops_of_empty_and_full() {
        assert!(depset(6, &[]).loops().is_empty());
        assert_eq!(DepSet::full(3).loops(), vec![1, 2, 3]);
    }

    #[test]
    fn loops_match_degree_characterization() {
        for d in [
            crossing_set(),
            depset(6, &[(2, 3), (2, 4), (2, 6), (3, 4)]),
            DepSet::full(5),
        ] {
            let n = d.n();
            let deg = d.degrees();
            let by_degree: Vec<usize> = (1..=n).filter(|&i| deg[i] == n - 1).collect();
            assert_eq!(d.loops(), by_degree);
        }
    }

    #[test]
    fn complement_of_small_example_has_eleven_bases() {
        let d = depset(6, &[(1, 2), (1, 3), (2, 3), (4, 5)]);
        let c = d.complement();
        assert_eq!(c.len(), 11);
        let expected = depset(
            6,
            &[
                (1, 4),
                (1, 5),
                (1, 6),
                (2, 4),
                (2, 5),
                (2, 6),
                (3, 4),
                (3, 5),
                (3, 6),
                (4, 6),
                (5, 6),
            ],
        );
        assert_eq!(c, expected);
    }

    #[test]
    fn complement_of_full_is_empty() {
        assert_eq!(DepSet::full(4).complement(), DepSet::empty(4));
    }

    #[test]
    fn add_vanishing_example() {
        let d = depset(6, &[(2, 3), (2, 4), (2, 6), (3, 4)]);
        let got = d.add_vanishing(&[2]).unwrap();
        let expected = depset(6, &[(1, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 4)]);
        assert_eq!(got, expected);
        assert_eq!(got.loops(), vec![2]);
    }

    #[test]
    fn add_vanishing_trivial_cases() {
        let d = depset(6, &[(1, 3)]);
        assert_eq!(d.add_vanishing(&[]).unwrap(), d);
        assert_eq!(
            DepSet::empty(4).add_vanishing(&[1, 2, 3, 4]).unwrap(),
            DepSet::full(4)
        );
    }

    #[test]
    fn closure_completes_components() {
        let d = depset(6, &[(2, 3), (2, 4), (2, 6), (3, 4)]);
        let expected = depset(6, &[(2, 3), (2, 4), (2, 6), (3, 4), (3, 6), (4, 6)]);
        assert_eq!(d.closure(), expected);
    }

    #[test]
    fn closure_triangle() {
        let d = depset(4, &[(1, 2), (2, 3)]);
        assert_eq!(d.closure(), depset(4, &[(1, 2), (1, 3), (2, 3)]));
    }

    #[test]
    fn closure_fixed_on_matroids() {
        let m = depset(6, &[(1, 2), (1, 3), (2, 3), (4, 5)]);
        assert_eq!(m.closure(), m);
        assert_eq!(m.closure().closure(), m.closure());
    }

    #[test]
    fn closure_promotes_spanning_component_to_full() {
        // completing a component that touches every vertex makes every vertex
        // a loop, so the closure is the full pair set
        let d = depset(4, &[(1, 2), (2, 3), (3, 4)]);
        assert_eq!(d.closure(), DepSet::full(4));
    }

    #[test]
    fn closure_respects_existing_loops() {
        // 2 is a loop on [3], so the path 1-2-3 does not complete
        let d = depset(3, &[(1, 2), (2, 3)]);
        assert_eq!(d.loops(), vec![2]);
        assert_eq!(d.closure(), d);
    }

    #[test]
    fn closure_is_not_monotone_across_new_loops() {
        // enlarging a set can turn the connecting vertex into a loop, and the
        // completion it used to force disappears
        let d = depset(4, &[(1, 2), (2, 3)]);
        let e = depset(4, &[(1, 2), (2, 3), (2, 4)]);
        assert!(d.is_subset_of(&e));
        assert!(d.closure().contains(1, 3));
        assert_eq!(e.closure(), e);
        assert!(!d.closure().is_subset_of(&e.closure()));
    }

    #[test]
    fn connect_crossing_components_gives_complete_six() {
        let d = crossing_set();
        let got = d.connect(&[1, 2, 4], &[3, 5, 6]).unwrap();
        let mut pairs = Vec::new();
        for i in 1..=6 {
            for j in (i + 1)..=6 {
                pairs.push((i, j));
            }
        }
        for i in 1..=8 {
            if i != 7 {
                pairs.push((7, i));
            }
        }
        assert_eq!(got, depset(8, &pairs));
    }

    #[test]
    fn connect_within_complete_component_is_identity() {
        let d = depset(5, &[(1, 2)]);
        assert_eq!(d.connect(&[1], &[2]).unwrap(), d);
    }

    #[test]
    fn connect_two_singletons() {
        assert_eq!(
            DepSet::empty(4).connect(&[1], &[3]).unwrap(),
            depset(4, &[(1, 3)])
        );
        assert_eq!(DepSet::empty(4).connect(&[1], &[1, 3]), Err(Error::Overlap));
    }

    #[test]
    fn relabel_shift_and_identity() {
        let d = depset(4, &[(1, 2)]);
        let shifted = d.relabel(&Relabeling::cyclic_shift(4, 1));
        assert_eq!(shifted, depset(4, &[(2, 3)]));
        assert_eq!(d.relabel(&Relabeling::identity(4)), d);
        assert_eq!(shifted.len(), d.len());
    }

    #[test]
    fn relabel_wraps_cyclically() {
        let d = depset(4, &[(3, 4)]);
        let shifted = d.relabel(&Relabeling::cyclic_shift(4, 1));
        assert_eq!(shifted, depset(4, &[(1, 4)]));
    }

    #[test]
    fn from_order_matches_manual_relabeling() {
        // order lists old labels by new position
        let r = Relabeling::from_order(&[2, 3, 1]).unwrap();
        assert_eq!(r.apply(2), 1);
        assert_eq!(r.apply(3), 2);
        assert_eq!(r.apply(1), 3);
        let inv = r.inverse();
        for x in 1..=3 {
            assert_eq!(inv.apply(r.apply(x)), x);
        }
    }
}
