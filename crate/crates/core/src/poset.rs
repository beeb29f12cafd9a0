//! Finite posets, read as finite T₀ spaces.
//!
//! A [`Poset`] stores only its Hasse diagram (the cover relation). At
//! construction it validates the diagram and precomputes, for every point,
//! the inclusive down-set `U_x = {y : y <= x}` and up-set `F_x = {y : y >= x}`
//! as bitsets, so order queries are a single bit test.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("point index {index} out of range for a poset of {len} points")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("label {0:?} appears more than once")]
    DuplicateLabel(String),
    #[error("cover ({lo}, {hi}) is listed twice")]
    DuplicateCover { lo: usize, hi: usize },
    #[error("covers contain a cycle: {0:?}")]
    Cycle(Vec<usize>),
    #[error("cover ({lo}, {hi}) is transitive: implied by {lo} < {via} < {hi}")]
    TransitiveCover { lo: usize, hi: usize, via: usize },
    #[error("poset is empty")]
    Empty,
    #[error("malformed poset file: {0}")]
    Format(String),
}

/// A finite partially ordered set given by its cover relation.
#[derive(Clone, Debug)]
pub struct Poset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    covers: Vec<(usize, usize)>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
    down: Vec<FixedBitSet>,
    up: Vec<FixedBitSet>,
    heights: Vec<usize>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.covers == other.covers
    }
}

impl Eq for Poset {}

/// On-disk form: `{"points": [...], "covers": [[lo, hi], ...]}`.
#[derive(Serialize, Deserialize)]
struct PosetFile {
    points: Vec<String>,
    covers: Vec<[usize; 2]>,
}

impl Poset {
    /// Builds a poset from labels and cover pairs `(lower, upper)`.
    ///
    /// Rejects out-of-range indices, repeated labels or covers, cycles, and
    /// covers that are implied by a longer path. Covers are stored sorted.
    pub fn new(labels: Vec<String>, covers: Vec<(usize, usize)>) -> Result<Self, PosetError> {
        let n = labels.len();
        let mut index = HashMap::with_capacity(n);
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(PosetError::DuplicateLabel(label.clone()));
            }
        }

        let mut seen = HashSet::with_capacity(covers.len());
        for &(lo, hi) in &covers {
            for index in [lo, hi] {
                if index >= n {
                    return Err(PosetError::IndexOutOfRange { index, len: n });
                }
            }
            if lo == hi {
                return Err(PosetError::Cycle(vec![lo]));
            }
            if !seen.insert((lo, hi)) {
                return Err(PosetError::DuplicateCover { lo, hi });
            }
        }

        let mut covers = covers;
        covers.sort_unstable();
        let mut lower = vec![Vec::new(); n];
        let mut upper = vec![Vec::new(); n];
        for &(lo, hi) in &covers {
            upper[lo].push(hi);
            lower[hi].push(lo);
        }

        let topo = topological_order(&lower, &upper)?;

        let mut down = vec![FixedBitSet::with_capacity(n); n];
        let mut heights = vec![0; n];
        for &x in &topo {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(x);
            for &l in &lower[x] {
                set.union_with(&down[l]);
                heights[x] = heights[x].max(heights[l] + 1);
            }
            down[x] = set;
        }
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for &x in topo.iter().rev() {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(x);
            for &u in &upper[x] {
                set.union_with(&up[u]);
            }
            up[x] = set;
        }

        // A cover lo < hi is redundant iff lo lies below some other lower cover of hi.
        for &(lo, hi) in &covers {
            if let Some(&via) = lower[hi].iter().find(|&&z| z != lo && down[z].contains(lo)) {
                return Err(PosetError::TransitiveCover { lo, hi, via });
            }
        }

        Ok(Self {
            labels,
            index,
            covers,
            lower,
            upper,
            down,
            up,
            heights,
        })
    }

    /// Builds a poset from a strict order relation, computing its covers.
    /// `less` must be irreflexive and transitive on `0..labels.len()`.
    pub fn from_relation(labels: Vec<String>, less: impl Fn(usize, usize) -> bool) -> Result<Self, PosetError> {
        let n = labels.len();
        let mut covers = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && less(a, b) && !(0..n).any(|c| less(a, c) && less(c, b)) {
                    covers.push((a, b));
                }
            }
        }
        Self::new(labels, covers)
    }

    pub fn antichain(n: usize) -> Self {
        let labels = (0..n).map(|i| format!("a{i}")).collect();
        Self::new(labels, Vec::new()).expect("antichain is a valid poset")
    }

    pub fn chain(n: usize) -> Self {
        let labels = (0..n).map(|i| format!("c{i}")).collect();
        let covers = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(labels, covers).expect("chain is a valid poset")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Cover pairs `(lower, upper)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    pub fn is_cover(&self, lo: usize, hi: usize) -> bool {
        lo < self.len() && self.upper[lo].binary_search(&hi).is_ok()
    }

    fn check(&self, x: usize) -> Result<(), PosetError> {
        if x < self.len() {
            Ok(())
        } else {
            Err(PosetError::IndexOutOfRange {
                index: x,
                len: self.len(),
            })
        }
    }

    /// `x <= y`.
    pub fn leq(&self, x: usize, y: usize) -> Result<bool, PosetError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.down[y].contains(x))
    }

    /// Comparable in either direction. Panics on out-of-range indices.
    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.down[y].contains(x) || self.down[x].contains(y)
    }

    /// `U_x`, inclusive of `x`, in ascending index order.
    pub fn down_set(&self, x: usize) -> Result<Vec<usize>, PosetError> {
        self.check(x)?;
        Ok(self.down[x].ones().collect())
    }

    /// `F_x`, inclusive of `x`, in ascending index order.
    pub fn up_set(&self, x: usize) -> Result<Vec<usize>, PosetError> {
        self.check(x)?;
        Ok(self.up[x].ones().collect())
    }

    /// `|U_x|`. Panics on out-of-range indices.
    pub fn down_len(&self, x: usize) -> usize {
        self.down[x].count_ones(..)
    }

    /// `|F_x|`. Panics on out-of-range indices.
    pub fn up_len(&self, x: usize) -> usize {
        self.up[x].count_ones(..)
    }

    pub fn height_of_point(&self, x: usize) -> Result<usize, PosetError> {
        self.check(x)?;
        Ok(self.heights[x])
    }

    pub(crate) fn heights(&self) -> &[usize] {
        &self.heights
    }

    /// Longest chain length minus one; 0 for the empty poset.
    pub fn height(&self) -> usize {
        self.heights.iter().copied().max().unwrap_or(0)
    }

    pub fn is_antichain(&self) -> bool {
        self.covers.is_empty()
    }

    /// Whether the comparability graph is connected.
    pub fn is_connected(&self) -> Result<bool, PosetError> {
        if self.is_empty() {
            return Err(PosetError::Empty);
        }
        let mut seen = FixedBitSet::with_capacity(self.len());
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(x) = stack.pop() {
            for &y in self.lower[x].iter().chain(&self.upper[x]) {
                if !seen.put(y) {
                    stack.push(y);
                }
            }
        }
        Ok(seen.count_ones(..) == self.len())
    }

    /// Consecutive entries comparable. Out-of-range entries make it not a fence.
    pub fn is_fence(&self, seq: &[usize]) -> bool {
        seq.iter().all(|&x| x < self.len()) && seq.windows(2).all(|w| self.comparable(w[0], w[1]))
    }

    /// Restriction of the order to `subset`, with covers recomputed from the
    /// restricted order. Points keep their labels and relative index order.
    pub fn induced_subposet(&self, subset: &[usize]) -> Result<Poset, PosetError> {
        let mut points = subset.to_vec();
        points.sort_unstable();
        points.dedup();
        if let Some(&bad) = points.iter().find(|&&x| x >= self.len()) {
            return Err(PosetError::IndexOutOfRange {
                index: bad,
                len: self.len(),
            });
        }
        let mut mask = FixedBitSet::with_capacity(self.len());
        for &p in &points {
            mask.insert(p);
        }
        let position: HashMap<usize, usize> = points.iter().enumerate().map(|(i, &p)| (p, i)).collect();

        let mut covers = Vec::new();
        for &b in &points {
            let mut strictly_below = self.down[b].clone();
            strictly_below.intersect_with(&mask);
            strictly_below.set(b, false);
            for a in strictly_below.ones() {
                // a is covered by b iff nothing in the subset sits strictly between.
                if self.up[a].intersection(&strictly_below).count() == 1 {
                    covers.push((position[&a], position[&b]));
                }
            }
        }
        let labels = points.iter().map(|&p| self.labels[p].clone()).collect();
        Poset::new(labels, covers)
    }

    pub fn to_json(&self) -> String {
        let file = PosetFile {
            points: self.labels.clone(),
            covers: self.covers.iter().map(|&(lo, hi)| [lo, hi]).collect(),
        };
        serde_json::to_string_pretty(&file).expect("poset serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, PosetError> {
        let file: PosetFile = serde_json::from_str(text).map_err(|e| PosetError::Format(e.to_string()))?;
        let covers = file.covers.into_iter().map(|[lo, hi]| (lo, hi)).collect();
        Self::new(file.points, covers)
    }

    /// Graphviz rendering: one rank per height level, edges pointing upward,
    /// nodes and edges sorted by label so the output is reproducible.
    pub fn to_dot(&self) -> String {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by(|&a, &b| self.labels[a].cmp(&self.labels[b]));

        let mut out = String::from("digraph poset {\n    rankdir=BT;\n    node [shape=plaintext];\n");
        for level in 0..=self.height() {
            let members: Vec<usize> = order.iter().copied().filter(|&x| self.heights[x] == level).collect();
            if members.is_empty() {
                continue;
            }
            let _ = write!(out, "    {{ rank=same;");
            for x in members {
                let _ = write!(out, " {};", dot_id(&self.labels[x]));
            }
            out.push_str(" }\n");
        }
        let mut edges: Vec<(&str, &str)> = self
            .covers
            .iter()
            .map(|&(lo, hi)| (self.labels[lo].as_str(), self.labels[hi].as_str()))
            .collect();
        edges.sort_unstable();
        for (lo, hi) in edges {
            let _ = writeln!(out, "    {} -> {};", dot_id(lo), dot_id(hi));
        }
        out.push_str("}\n");
        out
    }
}

fn dot_id(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Kahn's algorithm; on failure, walks lower covers inside the unsorted
/// remainder until a point repeats, which yields a concrete cycle.
fn topological_order(lower: &[Vec<usize>], upper: &[Vec<usize>]) -> Result<Vec<usize>, PosetError> {
    let n = lower.len();
    let mut indegree: Vec<usize> = lower.iter().map(Vec::len).collect();
    let mut ready: Vec<usize> = (0..n).filter(|&x| indegree[x] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(x) = ready.pop() {
        order.push(x);
        for &u in &upper[x] {
            indegree[u] -= 1;
            if indegree[u] == 0 {
                ready.push(u);
            }
        }
    }
    if order.len() == n {
        return Ok(order);
    }

    let start = (0..n).find(|&x| indegree[x] > 0).expect("remainder is nonempty");
    let mut path = vec![start];
    let mut position = HashMap::from([(start, 0)]);
    let mut x = start;
    loop {
        x = *lower[x]
            .iter()
            .find(|&&l| indegree[l] > 0)
            .expect("every unsorted point has an unsorted lower cover");
        if let Some(&at) = position.get(&x) {
            let mut cycle = path[at..].to_vec();
            cycle.reverse();
            return Err(PosetError::Cycle(cycle));
        }
        position.insert(x, path.len());
        path.push(x);
    }
}

/// A sequence of points whose consecutive entries are comparable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fence(Vec<usize>);

impl Fence {
    pub fn new(poset: &Poset, seq: Vec<usize>) -> Option<Self> {
        poset.is_fence(&seq).then_some(Fence(seq))
    }

    pub fn points(&self) -> &[usize] {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn three_chain_validates() {
        let p = Poset::new(labels(&["a", "b", "c"]), vec![(0, 1), (1, 2)]).unwrap();
        assert!(p.leq(0, 2).unwrap());
        assert!(!p.leq(2, 0).unwrap());
        assert_eq!(p.height(), 2);
        assert!(p.is_connected().unwrap());
    }

    #[test]
    fn transitive_cover_is_rejected() {
        let err = Poset::new(labels(&["a", "b", "c"]), vec![(0, 1), (1, 2), (0, 2)]).unwrap_err();
        assert_eq!(err, PosetError::TransitiveCover { lo: 0, hi: 2, via: 1 });
    }

    #[test]
    fn two_cycle_is_rejected() {
        let err = Poset::new(labels(&["a", "b"]), vec![(0, 1), (1, 0)]).unwrap_err();
        match err {
            PosetError::Cycle(c) => {
                let mut c = c;
                c.sort();
                assert_eq!(c, vec![0, 1]);
            }
            other => panic!("expected cycle, got {other:?}"),
        }
    }

    #[test]
    fn longer_cycle_is_reported_as_cycle() {
        let err = Poset::new(labels(&["a", "b", "c", "d"]), vec![(0, 1), (1, 2), (2, 3), (3, 1)]).unwrap_err();
        let PosetError::Cycle(mut c) = err else {
            panic!("expected cycle")
        };
        c.sort();
        assert_eq!(c, vec![1, 2, 3]);
    }

    #[test]
    fn duplicate_label_and_bad_index() {
        assert_eq!(
            Poset::new(labels(&["a", "a"]), vec![]).unwrap_err(),
            PosetError::DuplicateLabel("a".into())
        );
        assert_eq!(
            Poset::new(labels(&["a"]), vec![(0, 3)]).unwrap_err(),
            PosetError::IndexOutOfRange { index: 3, len: 1 }
        );
        assert!(matches!(
            Poset::new(labels(&["a", "b"]), vec![(0, 1), (0, 1)]),
            Err(PosetError::DuplicateCover { lo: 0, hi: 1 })
        ));
    }

    #[test]
    fn leq_basics() {
        let anti = Poset::antichain(2);
        assert!(!anti.leq(0, 1).unwrap());
        assert!(anti.leq(1, 1).unwrap());
        assert!(anti.leq(0, 5).is_err());
    }

    #[test]
    fn down_and_up_sets_are_inclusive() {
        let p = Poset::chain(3);
        assert_eq!(p.down_set(0).unwrap(), vec![0]);
        assert_eq!(p.down_set(2).unwrap(), vec![0, 1, 2]);
        assert_eq!(p.up_set(2).unwrap(), vec![2]);
        assert_eq!(p.up_len(0), 3);
        assert!(p.up_set(3).is_err());
    }

    #[test]
    fn heights() {
        assert_eq!(Poset::antichain(5).height(), 0);
        assert_eq!(Poset::chain(3).height(), 2);
        assert_eq!(Poset::chain(3).height_of_point(1).unwrap(), 1);
        assert_eq!(Poset::new(vec![], vec![]).unwrap().height(), 0);
    }

    #[test]
    fn connectivity() {
        assert!(!Poset::antichain(2).is_connected().unwrap());
        assert!(Poset::chain(3).is_connected().unwrap());
        assert_eq!(Poset::antichain(0).is_connected(), Err(PosetError::Empty));
    }

    #[test]
    fn fences() {
        let anti = Poset::antichain(2);
        assert!(!anti.is_fence(&[0, 1]));
        assert!(anti.is_fence(&[1]));
        assert!(anti.is_fence(&[]));
        // a < b > c
        let v = Poset::new(labels(&["a", "b", "c"]), vec![(0, 1), (2, 1)]).unwrap();
        assert!(Fence::new(&v, vec![0, 1, 2]).is_some());
        assert!(Fence::new(&v, vec![0, 2]).is_none());
    }

    #[test]
    fn induced_subposet_recomputes_covers() {
        let p = Poset::chain(3);
        let sub = p.induced_subposet(&[0, 2]).unwrap();
        assert_eq!(sub.labels(), &["c0".to_string(), "c2".to_string()]);
        assert_eq!(sub.covers(), &[(0, 1)]);
        assert_eq!(p.induced_subposet(&[2, 1, 0]).unwrap(), p);
    }

    #[test]
    fn from_relation_matches_chain() {
        let p = Poset::from_relation(labels(&["c0", "c1", "c2"]), |a, b| a < b).unwrap();
        assert_eq!(p, Poset::chain(3));
    }

    #[test]
    fn json_round_trip() {
        let p = Poset::new(labels(&["x", "y", "z"]), vec![(2, 1), (0, 1)]).unwrap();
        let text = p.to_json();
        assert!(text.contains("\"points\""));
        assert_eq!(Poset::from_json(&text).unwrap(), p);
        assert!(matches!(
            Poset::from_json("{\"points\": 3}"),
            Err(PosetError::Format(_))
        ));
    }

    #[test]
    fn dot_is_ranked_and_sorted() {
        let p = Poset::new(labels(&["b", "a", "t"]), vec![(1, 2), (0, 2)]).unwrap();
        let dot = p.to_dot();
        assert_eq!(
            dot,
            "digraph poset {\n    rankdir=BT;\n    node [shape=plaintext];\n    \
             { rank=same; \"a\"; \"b\"; }\n    { rank=same; \"t\"; }\n    \
             \"a\" -> \"t\";\n    \"b\" -> \"t\";\n}\n"
        );
    }
}
