//! Finite posets, intervals, and the order combinatorics the rank formulas
//! consume: up/down-sets, sources/sinks, pre-joins/pre-meets, labeled join
//! and meet index sets, and interval enumeration.
//!
//! Element indices `0..n` double as the fixed auxiliary total order used for
//! every tie-break and lexicographic ordering, so all derived matrices are
//! reproducible.

use crate::error::{Error, Result};
use std::collections::BTreeSet;

/// A finite poset stored with its full order closure and covering arrows.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    labels: Vec<String>,
    leq: Vec<bool>, // n*n, leq[x*n + y] <=> x <= y
    hasse: Vec<(usize, usize)>,
}

impl Poset {
    /// Builds a poset from generating edges `x < y`. The stored relation is
    /// the reflexive-transitive closure; covering arrows are recomputed, so
    /// redundant input edges are dropped.
    pub fn from_hasse(n: usize, edges: &[(usize, usize)]) -> Result<Poset> {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::from_hasse_labeled(n, edges, labels)
    }

    pub fn from_hasse_labeled(
        n: usize,
        edges: &[(usize, usize)],
        labels: Vec<String>,
    ) -> Result<Poset> {
        if labels.len() != n {
            return Err(Error::BadInput(format!(
                "{} labels for {} elements",
                labels.len(),
                n
            )));
        }
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(x, y) in edges {
            if x >= n {
                return Err(Error::IndexOutOfRange(x, n));
            }
            if y >= n {
                return Err(Error::IndexOutOfRange(y, n));
            }
            leq[x * n + y] = true;
        }
        // Warshall closure.
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..i {
                if leq[i * n + j] && leq[j * n + i] {
                    return Err(Error::Cycle(j, i));
                }
            }
        }
        let mut hasse = Vec::new();
        for x in 0..n {
            'next: for y in 0..n {
                if x == y || !leq[x * n + y] {
                    continue;
                }
                for z in 0..n {
                    if z != x && z != y && leq[x * n + z] && leq[z * n + y] {
                        continue 'next;
                    }
                }
                hasse.push((x, y));
            }
        }
        hasse.sort_unstable();
        Ok(Poset {
            n,
            labels,
            leq,
            hasse,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.n + y]
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// Covering pairs `(x, y)`: `x < y` with nothing strictly between.
    pub fn hasse_arrows(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    /// Same order relation regardless of labels.
    pub fn same_order(&self, other: &Poset) -> bool {
        self.n == other.n && self.leq == other.leq
    }

    pub fn segment(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&z| self.leq(x, z) && self.leq(z, y))
            .collect()
    }

    pub fn up_set(&self, set: &[usize]) -> Vec<usize> {
        (0..self.n)
            .filter(|&y| set.iter().any(|&x| self.leq(x, y)))
            .collect()
    }

    pub fn down_set(&self, set: &[usize]) -> Vec<usize> {
        (0..self.n)
            .filter(|&y| set.iter().any(|&x| self.leq(y, x)))
            .collect()
    }

    /// Minimal elements of the full subposet on `set`, in index order.
    pub fn sources(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set
            .iter()
            .copied()
            .filter(|&x| !set.iter().any(|&y| self.lt(y, x)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Maximal elements of the full subposet on `set`, in index order.
    pub fn sinks(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set
            .iter()
            .copied()
            .filter(|&x| !set.iter().any(|&y| self.lt(x, y)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Minimal upper bounds of `{a, b}` in the ambient poset.
    pub fn pre_join(&self, a: usize, b: usize) -> Vec<usize> {
        debug_assert_ne!(a, b);
        let common: Vec<usize> = (0..self.n)
            .filter(|&z| self.leq(a, z) && self.leq(b, z))
            .collect();
        self.sources(&common)
    }

    /// Maximal lower bounds of `{a, b}` in the ambient poset.
    pub fn pre_meet(&self, a: usize, b: usize) -> Vec<usize> {
        debug_assert_ne!(a, b);
        let common: Vec<usize> = (0..self.n)
            .filter(|&z| self.leq(z, a) && self.leq(z, b))
            .collect();
        self.sinks(&common)
    }

    fn hasse_neighbors(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.hasse.iter().filter_map(move |&(a, b)| {
            if a == x {
                Some(b)
            } else if b == x {
                Some(a)
            } else {
                None
            }
        })
    }

    /// Connectivity of `set` in the Hasse quiver of its full subposet.
    pub fn is_connected(&self, set: &[usize]) -> bool {
        if set.is_empty() {
            return false;
        }
        // For convex sets this agrees with connectivity in the ambient
        // Hasse quiver; we check the subposet's own covers to be exact.
        let members: BTreeSet<usize> = set.iter().copied().collect();
        let covers_in_sub = |x: usize, y: usize| -> bool {
            self.lt(x, y)
                && !members
                    .iter()
                    .any(|&z| z != x && z != y && self.lt(x, z) && self.lt(z, y))
        };
        let mut seen = BTreeSet::new();
        let start = *members.iter().next().unwrap();
        let mut stack = vec![start];
        seen.insert(start);
        while let Some(x) = stack.pop() {
            for &y in &members {
                if !seen.contains(&y) && (covers_in_sub(x, y) || covers_in_sub(y, x)) {
                    seen.insert(y);
                    stack.push(y);
                }
            }
        }
        seen.len() == members.len()
    }

    pub fn is_convex(&self, set: &[usize]) -> bool {
        self.convexity_witness(set).is_none()
    }

    fn convexity_witness(&self, set: &[usize]) -> Option<(usize, usize, usize)> {
        let members: BTreeSet<usize> = set.iter().copied().collect();
        for &x in set {
            for &y in set {
                if !self.lt(x, y) {
                    continue;
                }
                for z in 0..self.n {
                    if self.lt(x, z) && self.lt(z, y) && !members.contains(&z) {
                        return Some((x, z, y));
                    }
                }
            }
        }
        None
    }

    /// Validates and wraps a member set as an interval.
    pub fn interval(&self, members: &[usize]) -> Result<Interval> {
        if members.is_empty() {
            return Err(Error::EmptyInterval);
        }
        for &x in members {
            if x >= self.n {
                return Err(Error::IndexOutOfRange(x, self.n));
            }
        }
        let mut sorted: Vec<usize> = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some((low, witness, high)) = self.convexity_witness(&sorted) {
            return Err(Error::NotConvex { low, witness, high });
        }
        if !self.is_connected(&sorted) {
            return Err(Error::NotConnected);
        }
        Ok(Interval { members: sorted })
    }

    /// The segment `[x, y]` as an interval.
    pub fn segment_interval(&self, x: usize, y: usize) -> Result<Interval> {
        if !self.leq(x, y) {
            return Err(Error::BadInput(format!("{x} <= {y} required")));
        }
        self.interval(&self.segment(x, y))
    }

    pub fn whole_interval(&self) -> Result<Interval> {
        self.interval(&(0..self.n).collect::<Vec<_>>())
    }

    /// `⇑I = ↑I \ I`; an up-set because intervals are convex.
    pub fn proper_up_set(&self, i: &Interval) -> Vec<usize> {
        let up = self.up_set(&i.members);
        up.into_iter().filter(|x| !i.contains(*x)).collect()
    }

    /// `⇓I = ↓I \ I`.
    pub fn proper_down_set(&self, i: &Interval) -> Vec<usize> {
        let down = self.down_set(&i.members);
        down.into_iter().filter(|x| !i.contains(*x)).collect()
    }

    /// Labeled disjoint union of pre-joins over source pairs, lex-sorted by
    /// `(low, high, witness)`. Witnesses may land outside the interval.
    pub fn sc1(&self, i: &Interval) -> Vec<LabeledJoin> {
        self.sc1_of_sources(&self.sources(&i.members))
    }

    pub fn sc1_of_sources(&self, sources: &[usize]) -> Vec<LabeledJoin> {
        let mut out = Vec::new();
        for (ai, &a) in sources.iter().enumerate() {
            for &b in &sources[ai + 1..] {
                for c in self.pre_join(a, b) {
                    out.push(LabeledJoin {
                        pair: (a, b),
                        witness: c,
                    });
                }
            }
        }
        out.sort_unstable_by_key(|j| (j.pair.0, j.pair.1, j.witness));
        out
    }

    /// Labeled disjoint union of pre-meets over sink pairs, lex-sorted.
    pub fn sk1(&self, i: &Interval) -> Vec<LabeledJoin> {
        self.sk1_of_sinks(&self.sinks(&i.members))
    }

    pub fn sk1_of_sinks(&self, sinks: &[usize]) -> Vec<LabeledJoin> {
        let mut out = Vec::new();
        for (bi, &a) in sinks.iter().enumerate() {
            for &b in &sinks[bi + 1..] {
                for d in self.pre_meet(a, b) {
                    out.push(LabeledJoin {
                        pair: (a, b),
                        witness: d,
                    });
                }
            }
        }
        out.sort_unstable_by_key(|j| (j.pair.0, j.pair.1, j.witness));
        out
    }

    /// Every nonempty convex connected subset, each exactly once, sorted by
    /// (size, lexicographic member list).
    ///
    /// BFS over intervals: grow by one Hasse-adjacent element, then take the
    /// convex closure. Every interval is reachable because a connected poset
    /// with at least two elements always has an extreme element whose
    /// removal keeps it connected.
    pub fn enumerate_intervals(&self) -> Vec<Interval> {
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue: Vec<Vec<usize>> = Vec::new();
        for x in 0..self.n {
            let s = vec![x];
            if seen.insert(s.clone()) {
                queue.push(s);
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let current = queue[head].clone();
            head += 1;
            let member_set: BTreeSet<usize> = current.iter().copied().collect();
            let mut adjacent = BTreeSet::new();
            for &x in &current {
                for y in self.hasse_neighbors(x) {
                    if !member_set.contains(&y) {
                        adjacent.insert(y);
                    }
                }
            }
            for e in adjacent {
                let mut next: BTreeSet<usize> = member_set.clone();
                next.insert(e);
                self.convex_close(&mut next);
                let key: Vec<usize> = next.iter().copied().collect();
                if seen.insert(key.clone()) {
                    queue.push(key);
                }
            }
        }
        let mut lists: Vec<Vec<usize>> = seen.into_iter().collect();
        lists.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        lists
            .into_iter()
            .map(|members| Interval { members })
            .collect()
    }

    fn convex_close(&self, set: &mut BTreeSet<usize>) {
        loop {
            let mut added = false;
            let snapshot: Vec<usize> = set.iter().copied().collect();
            for &x in &snapshot {
                for &y in &snapshot {
                    if !self.lt(x, y) {
                        continue;
                    }
                    for z in 0..self.n {
                        if self.lt(x, z) && self.lt(z, y) && set.insert(z) {
                            added = true;
                        }
                    }
                }
            }
            if !added {
                break;
            }
        }
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poset(n={}, hasse={:?})", self.n, self.hasse)
    }
}

/// A convex connected nonempty subset, stored as a sorted member list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    members: Vec<usize>,
}

impl Interval {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

impl std::fmt::Debug for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Interval{:?}", self.members)
    }
}

/// One element of `sc1`/`sk1`: a source (sink) pair with a pre-join
/// (pre-meet) witness. The pair is ordered by the auxiliary index order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LabeledJoin {
    pub pair: (usize, usize),
    pub witness: usize,
}

/// Chain `A_n` with elements `0 < 1 < ... < n-1`.
pub fn make_chain(n: usize) -> Poset {
    assert!(n >= 1);
    let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    let labels = (1..=n).map(|i| i.to_string()).collect();
    Poset::from_hasse_labeled(n, &edges, labels).expect("chain is acyclic")
}

/// 2D grid `A_m x A_n` in row-major numbering: element `(x, y)` with
/// `1 <= x <= m`, `1 <= y <= n` has index `(y-1)*m + (x-1)`.
pub fn make_grid(m: usize, n: usize) -> Poset {
    assert!(m >= 1 && n >= 1);
    let idx = |x: usize, y: usize| (y - 1) * m + (x - 1);
    let mut edges = Vec::new();
    let mut labels = vec![String::new(); m * n];
    for y in 1..=n {
        for x in 1..=m {
            labels[idx(x, y)] = format!("({x},{y})");
            if x < m {
                edges.push((idx(x, y), idx(x + 1, y)));
            }
            if y < n {
                edges.push((idx(x, y), idx(x, y + 1)));
            }
        }
    }
    Poset::from_hasse_labeled(m * n, &edges, labels).expect("grid is acyclic")
}

/// Zigzag poset of type A from an orientation string: element count is
/// `len + 1`; character `i` is 'f' for an arrow `i -> i+1` and 'b' for
/// `i <- i+1`.
pub fn make_zigzag(orientations: &str) -> Result<Poset> {
    let n = orientations.len() + 1;
    let mut edges = Vec::new();
    for (i, ch) in orientations.chars().enumerate() {
        match ch {
            'f' => edges.push((i, i + 1)),
            'b' => edges.push((i + 1, i)),
            _ => return Err(Error::BadInput(format!("orientation char `{ch}`"))),
        }
    }
    Poset::from_hasse(n, &edges)
}

/// Bipath poset `B_{n,m}`: global minimum, an upper path of length `n`, a
/// lower path of length `m`, and a global maximum. Canonical numbering:
/// `0^` is 0, upper `1..n` are `1..=n`, lower `1'..m'` are `n+1..=n+m`,
/// `1^` is `n+m+1`.
pub fn make_bipath(n: usize, m: usize) -> Poset {
    assert!(n >= 1 && m >= 1);
    let total = n + m + 2;
    let top = n + m + 1;
    let mut edges = vec![(0, 1), (0, n + 1), (n, top), (n + m, top)];
    for i in 1..n {
        edges.push((i, i + 1));
    }
    for j in 1..m {
        edges.push((n + j, n + j + 1));
    }
    let mut labels = vec!["0^".to_string()];
    labels.extend((1..=n).map(|i| i.to_string()));
    labels.extend((1..=m).map(|j| format!("{j}'")));
    labels.push("1^".to_string());
    Poset::from_hasse_labeled(total, &edges, labels).expect("bipath is acyclic")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_closure() {
        let p = Poset::from_hasse(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.leq(0, 2));
        assert_eq!(p.hasse_arrows(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn cycle_rejected() {
        assert!(matches!(
            Poset::from_hasse(2, &[(0, 1), (1, 0)]),
            Err(Error::Cycle(_, _))
        ));
    }

    #[test]
    fn redundant_edges_dropped() {
        let p = Poset::from_hasse(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(p.hasse_arrows(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn grid_5_2_shape() {
        let p = make_grid(5, 2);
        assert_eq!(p.len(), 10);
        assert_eq!(p.hasse_arrows().len(), 13);
    }

    #[test]
    fn chain_up_set() {
        let p = make_chain(3);
        assert_eq!(p.up_set(&[1]), vec![1, 2]);
        assert_eq!(p.down_set(&[1]), vec![0, 1]);
    }

    #[test]
    fn up_set_idempotent_and_source_stable() {
        let p = make_grid(3, 3);
        for i in p.enumerate_intervals() {
            let up = p.up_set(i.members());
            assert_eq!(p.up_set(&up), up);
            assert_eq!(p.sources(&up), p.sources(i.members()));
            let down = p.down_set(i.members());
            assert_eq!(p.sinks(&down), p.sinks(i.members()));
        }
    }

    #[test]
    fn proper_up_down_are_up_down_sets() {
        let p = make_grid(3, 2);
        for i in p.enumerate_intervals() {
            let uu = p.proper_up_set(&i);
            assert_eq!(p.up_set(&uu), uu, "proper up-set must be an up-set");
            let dd = p.proper_down_set(&i);
            assert_eq!(p.down_set(&dd), dd);
        }
    }

    // G_{4,2} with the numbering of the worked grid example:
    // bottom row 1..4 are indices 0..3, top row 1'..4' are 4..7.
    fn g42_interval() -> (Poset, Interval) {
        let p = make_grid(4, 2);
        let i = p.interval(&[1, 2, 3, 4, 5, 6]).unwrap();
        (p, i)
    }

    #[test]
    fn g42_interval_index_sets() {
        let (p, i) = g42_interval();
        assert_eq!(p.sources(i.members()), vec![1, 4]); // 2, 1'
        assert_eq!(p.sinks(i.members()), vec![3, 6]); // 4, 3'
        assert_eq!(p.proper_up_set(&i), vec![7]); // {4'}
        assert_eq!(p.proper_down_set(&i), vec![0]); // {1}
        assert_eq!(
            p.sc1(&i),
            vec![LabeledJoin {
                pair: (1, 4),
                witness: 5
            }] // {2,1'}_{2'}
        );
        assert_eq!(
            p.sk1(&i),
            vec![LabeledJoin {
                pair: (3, 6),
                witness: 2
            }] // {4,3'}_3
        );
    }

    #[test]
    fn whole_poset_has_empty_proper_up_set() {
        let p = make_grid(3, 2);
        let i = p.whole_interval().unwrap();
        assert!(p.proper_up_set(&i).is_empty());
        assert!(p.proper_down_set(&i).is_empty());
    }

    #[test]
    fn antichain_sources_equal_sinks() {
        let p = Poset::from_hasse(2, &[]).unwrap();
        assert_eq!(p.sources(&[0, 1]), vec![0, 1]);
        assert_eq!(p.sinks(&[0, 1]), vec![0, 1]);
    }

    // The five-element poset whose pre-join of {a, b} is {c, d}:
    // a, b below c, d, everything below e.
    #[test]
    fn pre_join_two_minimal_upper_bounds() {
        // a=0, b=1, c=2, d=3, e=4
        let p = Poset::from_hasse(5, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(p.pre_join(0, 1), vec![2, 3]);
    }

    #[test]
    fn pre_join_on_lattice_is_singleton() {
        let p = make_grid(3, 3);
        for a in 0..p.len() {
            for b in 0..p.len() {
                if a != b && !p.comparable(a, b) {
                    assert_eq!(p.pre_join(a, b).len(), 1);
                    assert_eq!(p.pre_meet(a, b).len(), 1);
                }
            }
        }
    }

    #[test]
    fn pre_join_empty_without_upper_bound() {
        let p = Poset::from_hasse(2, &[]).unwrap();
        assert!(p.pre_join(0, 1).is_empty());
    }

    // Up-set with sources {a,b,c} and sc1 = [{a,b}_d, {a,c}_d, {b,c}_d, {b,c}_e].
    #[test]
    fn sc1_labeled_multiset() {
        // a=0, b=1, c=2, d=3, e=4; arrows a->d, b->d, b->e, c->d, c->e.
        let p = Poset::from_hasse(5, &[(0, 3), (1, 3), (1, 4), (2, 3), (2, 4)]).unwrap();
        let joins = p.sc1_of_sources(&[0, 1, 2]);
        assert_eq!(
            joins,
            vec![
                LabeledJoin {
                    pair: (0, 1),
                    witness: 3
                },
                LabeledJoin {
                    pair: (0, 2),
                    witness: 3
                },
                LabeledJoin {
                    pair: (1, 2),
                    witness: 3
                },
                LabeledJoin {
                    pair: (1, 2),
                    witness: 4
                },
            ]
        );
    }

    #[test]
    fn sc1_empty_for_single_source() {
        let p = make_chain(4);
        let i = p.interval(&[1, 2]).unwrap();
        assert!(p.sc1(&i).is_empty());
    }

    #[test]
    fn interval_rejects_non_convex_and_disconnected() {
        let p = make_chain(3);
        assert!(matches!(p.interval(&[0, 2]), Err(Error::NotConvex { .. })));
        let q = Poset::from_hasse(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            q.interval(&[0, 1, 2, 3]),
            Err(Error::NotConnected)
        ));
        assert!(matches!(p.interval(&[]), Err(Error::EmptyInterval)));
    }

    #[test]
    fn enumerate_chain_and_singleton() {
        assert_eq!(make_chain(3).enumerate_intervals().len(), 6);
        assert_eq!(make_chain(1).enumerate_intervals().len(), 1);
    }

    fn brute_force_intervals(p: &Poset) -> Vec<Vec<usize>> {
        let n = p.len();
        let mut out = Vec::new();
        for mask in 1u32..(1 << n) {
            let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if p.is_convex(&members) && p.is_connected(&members) {
                out.push(members);
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    #[test]
    fn enumerate_matches_brute_force_on_g22() {
        let p = make_grid(2, 2);
        let bfs: Vec<Vec<usize>> = p
            .enumerate_intervals()
            .iter()
            .map(|i| i.members().to_vec())
            .collect();
        assert_eq!(bfs, brute_force_intervals(&p));
        // 4 singletons, 4 comparable pairs, 2 triples, the whole square.
        assert_eq!(bfs.len(), 11);
    }

    #[test]
    fn enumerate_matches_brute_force_on_assorted_posets() {
        let posets = vec![
            make_bipath(2, 1),
            make_zigzag("fbfbf").unwrap(),
            Poset::from_hasse(6, &[(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)]).unwrap(),
            make_grid(4, 2),
        ];
        for p in posets {
            let bfs: Vec<Vec<usize>> = p
                .enumerate_intervals()
                .iter()
                .map(|i| i.members().to_vec())
                .collect();
            assert_eq!(bfs, brute_force_intervals(&p), "poset {p:?}");
        }
    }

    #[test]
    fn bipath_2_1_shape() {
        let p = make_bipath(2, 1);
        assert_eq!(p.len(), 5);
        // 0^ < {1, 2, 1'} < 1^ with 1 < 2.
        assert!(p.leq(0, 4));
        assert!(p.leq(1, 2));
        assert!(!p.comparable(1, 3));
        assert_eq!(p.label(0), "0^");
        assert_eq!(p.label(3), "1'");
        assert_eq!(p.label(4), "1^");
    }

    #[test]
    fn chain_of_one() {
        let p = make_chain(1);
        assert_eq!(p.len(), 1);
        assert!(p.hasse_arrows().is_empty());
    }
}
