//! Order automorphisms of finite posets, beat points, cores and the
//! self-equivalence group.
//!
//! [`enumerate_automorphisms`] is a backtracking search that only maps a
//! point to points with the same refined [`Signature`] and extends partial
//! maps along covers, so on connected posets each branch is almost forced
//! once its first point is placed. [`automorphisms_naive`] is the brute-force
//! reference it is tested against.

use std::collections::{BTreeMap, HashSet};

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poset::Poset;

/// Largest poset accepted by [`automorphisms_naive`].
pub const NAIVE_LIMIT: usize = 10;

/// Posets smaller than this are always searched on one thread.
const PARALLEL_MIN_POINTS: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AutError {
    #[error("brute force is limited to {limit} points, poset has {len}")]
    TooLarge { len: usize, limit: usize },
    #[error("not a permutation: {0}")]
    NotBijective(String),
}

/// A permutation of point indices, stored as its image array.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, AutError> {
        let n = images.len();
        let mut hit = vec![false; n];
        for (x, &y) in images.iter().enumerate() {
            if y >= n || std::mem::replace(&mut hit[y], true) {
                return Err(AutError::NotBijective(format!("bad image {y} of {x}")));
            }
        }
        Ok(Self(images))
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y] = x;
        }
        Permutation(inv)
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> usize {
        let mut seen = vec![false; self.0.len()];
        let mut order = 1;
        for start in 0..self.0.len() {
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x];
                len += 1;
            }
            if len > 0 {
                order = lcm(order, len);
            }
        }
        order
    }

    /// Whether this maps covers onto covers. For a bijection of a finite
    /// poset that is the same as preserving and reflecting the order.
    pub fn is_automorphism_of(&self, poset: &Poset) -> bool {
        self.0.len() == poset.len()
            && poset
                .covers()
                .iter()
                .all(|&(lo, hi)| poset.is_cover(self.0[lo], self.0[hi]))
    }
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// A set of permutations kept sorted, e.g. the full group `Aut(X)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PermSet {
    perms: Vec<Permutation>,
}

#[derive(Serialize)]
struct PermSetFile<'a> {
    order: usize,
    order_histogram: BTreeMap<usize, usize>,
    permutations: &'a [Permutation],
}

impl PermSet {
    pub fn from_vec(mut perms: Vec<Permutation>) -> Self {
        perms.sort_unstable();
        perms.dedup();
        Self { perms }
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.perms.iter()
    }

    pub fn as_slice(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.perms.binary_search(p).is_ok()
    }

    pub fn position(&self, p: &Permutation) -> Option<usize> {
        self.perms.binary_search(p).ok()
    }

    /// Checks that the set is a group. Picks generators greedily and closes
    /// them under composition; every product must stay inside the set, and
    /// the closure must exhaust it. Costs `O(|S| · k² · n)` for `k`
    /// generators instead of the `O(|S|² · n)` of a full Cayley table.
    pub fn check_group_axioms(&self) -> Result<(), String> {
        let Some(first) = self.perms.first() else {
            return Err("empty set".into());
        };
        let identity = Permutation::identity(first.len());
        if !self.contains(&identity) {
            return Err("identity missing".into());
        }
        let mut gens: Vec<&Permutation> = Vec::new();
        let mut closure = vec![false; self.perms.len()];
        closure[self.position(&identity).expect("identity present")] = true;
        for (i, p) in self.perms.iter().enumerate() {
            if closure[i] {
                continue;
            }
            gens.push(p);
            closure.iter_mut().for_each(|c| *c = false);
            let start = self.position(&identity).expect("identity present");
            closure[start] = true;
            let mut stack = vec![start];
            while let Some(j) = stack.pop() {
                for g in &gens {
                    let product = self.perms[j].compose(g);
                    match self.position(&product) {
                        Some(k) if !closure[k] => {
                            closure[k] = true;
                            stack.push(k);
                        }
                        Some(_) => {}
                        None => return Err(format!("{:?} ∘ {:?} missing", self.perms[j].images(), g.images())),
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for p in &self.perms {
            *hist.entry(p.order()).or_insert(0) += 1;
        }
        hist
    }

    /// `{"order": n, "order_histogram": {...}, "permutations": [[...], ...]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&PermSetFile {
            order: self.len(),
            order_histogram: self.order_histogram(),
            permutations: &self.perms,
        })
        .expect("permutation set serializes")
    }
}

impl<'a> IntoIterator for &'a PermSet {
    type Item = &'a Permutation;
    type IntoIter = std::slice::Iter<'a, Permutation>;

    fn into_iter(self) -> Self::IntoIter {
        self.perms.iter()
    }
}

/// Per-point invariants kept by every automorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    pub down: usize,
    pub up: usize,
    pub height: usize,
    /// Class after colour refinement on the Hasse diagram.
    pub class: usize,
}

/// Seeds classes with `(|U_x|, |F_x|, ht(x))` and refines by the multisets
/// of classes among upper and lower covers until the partition is stable.
pub fn signatures(poset: &Poset) -> Vec<Signature> {
    let n = poset.len();
    let seeds: Vec<(usize, usize, usize)> = (0..n)
        .map(|x| (poset.down_len(x), poset.up_len(x), poset.heights()[x]))
        .collect();
    let mut classes = dense_ids(&seeds);
    let mut count = classes.iter().copied().max().map_or(0, |c| c + 1);
    loop {
        let keys: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..n)
            .map(|x| {
                let ups = poset.upper_covers(x).iter().map(|&y| classes[y]).sorted().collect();
                let downs = poset.lower_covers(x).iter().map(|&y| classes[y]).sorted().collect();
                (classes[x], ups, downs)
            })
            .collect();
        let refined = dense_ids(&keys);
        let refined_count = refined.iter().copied().max().map_or(0, |c| c + 1);
        classes = refined;
        if refined_count == count {
            break;
        }
        count = refined_count;
    }
    (0..n)
        .map(|x| Signature {
            down: seeds[x].0,
            up: seeds[x].1,
            height: seeds[x].2,
            class: classes[x],
        })
        .collect()
}

/// Replaces each key by its rank among the distinct keys.
fn dense_ids<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let distinct: Vec<K> = keys.iter().cloned().sorted().dedup().collect();
    keys.iter()
        .map(|k| distinct.binary_search(k).expect("key is present"))
        .collect()
}

/// Static search plan: the order points are assigned in, and for each point
/// an earlier-assigned cover neighbour whose image restricts the candidates.
struct SearchPlan<'a> {
    poset: &'a Poset,
    class: Vec<usize>,
    order: Vec<usize>,
    anchor: Vec<Option<Anchor>>,
}

#[derive(Clone, Copy)]
enum Anchor {
    /// The point is an upper cover of this earlier point.
    Below(usize),
    /// The point is a lower cover of this earlier point.
    Above(usize),
}

impl<'a> SearchPlan<'a> {
    fn new(poset: &'a Poset) -> Self {
        let n = poset.len();
        let class: Vec<usize> = signatures(poset).iter().map(|s| s.class).collect();
        let mut class_size = vec![0usize; n];
        for &c in &class {
            class_size[c] += 1;
        }
        let mut placed = vec![false; n];
        let mut frontier = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut anchor = vec![None; n];
        for _ in 0..n {
            let key = |x: usize| (class_size[class[x]], x);
            let next = (0..n)
                .filter(|&x| !placed[x] && frontier[x])
                .min_by_key(|&x| key(x))
                .or_else(|| (0..n).filter(|&x| !placed[x]).min_by_key(|&x| key(x)))
                .expect("unplaced point remains");
            placed[next] = true;
            order.push(next);
            for &y in poset.upper_covers(next) {
                if !placed[y] && anchor[y].is_none() {
                    anchor[y] = Some(Anchor::Below(next));
                }
                frontier[y] = true;
            }
            for &y in poset.lower_covers(next) {
                if !placed[y] && anchor[y].is_none() {
                    anchor[y] = Some(Anchor::Above(next));
                }
                frontier[y] = true;
            }
        }
        Self {
            poset,
            class,
            order,
            anchor,
        }
    }

    fn candidates(&self, x: usize, state: &SearchState) -> Vec<usize> {
        let want = self.class[x];
        let pool: Vec<usize> = match self.anchor[x] {
            Some(Anchor::Below(a)) => self.poset.upper_covers(state.image[a]).to_vec(),
            Some(Anchor::Above(a)) => self.poset.lower_covers(state.image[a]).to_vec(),
            None => (0..self.poset.len()).collect(),
        };
        pool.into_iter()
            .filter(|&y| self.class[y] == want && state.preimage[y] == UNSET)
            .sorted()
            .collect()
    }

    /// Whether `x ↦ y` agrees with every assigned cover neighbour, in both directions.
    fn consistent(&self, x: usize, y: usize, state: &SearchState) -> bool {
        let p = self.poset;
        p.upper_covers(x)
            .iter()
            .all(|&u| state.image[u] == UNSET || p.is_cover(y, state.image[u]))
            && p.lower_covers(x)
                .iter()
                .all(|&l| state.image[l] == UNSET || p.is_cover(state.image[l], y))
            && p.upper_covers(y)
                .iter()
                .all(|&v| state.preimage[v] == UNSET || p.is_cover(x, state.preimage[v]))
            && p.lower_covers(y)
                .iter()
                .all(|&v| state.preimage[v] == UNSET || p.is_cover(state.preimage[v], x))
    }

    fn search(&self, depth: usize, state: &mut SearchState, out: &mut Vec<Permutation>) {
        if depth == self.order.len() {
            out.push(Permutation(state.image.clone()));
            return;
        }
        let x = self.order[depth];
        for y in self.candidates(x, state) {
            if self.consistent(x, y, state) {
                state.assign(x, y);
                self.search(depth + 1, state, out);
                state.unassign(x, y);
            }
        }
    }
}

const UNSET: usize = usize::MAX;

struct SearchState {
    image: Vec<usize>,
    preimage: Vec<usize>,
}

impl SearchState {
    fn new(n: usize) -> Self {
        Self {
            image: vec![UNSET; n],
            preimage: vec![UNSET; n],
        }
    }

    fn assign(&mut self, x: usize, y: usize) {
        self.image[x] = y;
        self.preimage[y] = x;
    }

    fn unassign(&mut self, x: usize, y: usize) {
        self.image[x] = UNSET;
        self.preimage[y] = UNSET;
    }
}

/// Worker count for the search: available parallelism, capped by the
/// `REALIZE_THREADS` environment variable when it is set.
pub fn worker_count() -> usize {
    let available = std::thread::available_parallelism().map_or(1, |n| n.get());
    match std::env::var("REALIZE_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        Some(cap) => available.min(cap.max(1)),
        None => available,
    }
}

/// All order automorphisms of `poset`, sorted. The top-level branches are
/// split across [`worker_count`] threads for larger posets; the merged
/// result is identical to a single-threaded run.
pub fn enumerate_automorphisms(poset: &Poset) -> PermSet {
    let n = poset.len();
    if n == 0 {
        return PermSet::from_vec(vec![Permutation::identity(0)]);
    }
    let plan = SearchPlan::new(poset);
    let first = plan.order[0];
    let top = plan.candidates(first, &SearchState::new(n));
    let workers = worker_count().min(top.len());

    let found = if workers <= 1 || n < PARALLEL_MIN_POINTS {
        let mut out = Vec::new();
        plan.search(0, &mut SearchState::new(n), &mut out);
        out
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let plan = &plan;
                    let mine: Vec<usize> = top.iter().copied().skip(w).step_by(workers).collect();
                    scope.spawn(move || {
                        let mut out = Vec::new();
                        let mut state = SearchState::new(n);
                        for y in mine {
                            state.assign(first, y);
                            plan.search(1, &mut state, &mut out);
                            state.unassign(first, y);
                        }
                        out
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("search worker panicked"))
                .collect()
        })
    };

    let group = PermSet::from_vec(found);
    if let Err(e) = group.check_group_axioms() {
        panic!("automorphism search produced a non-group: {e}");
    }
    group
}

/// Brute force over all `n!` bijections; the reference for
/// [`enumerate_automorphisms`].
pub fn automorphisms_naive(poset: &Poset) -> Result<PermSet, AutError> {
    let n = poset.len();
    if n > NAIVE_LIMIT {
        return Err(AutError::TooLarge {
            len: n,
            limit: NAIVE_LIMIT,
        });
    }
    let covers: HashSet<(usize, usize)> = poset.covers().iter().copied().collect();
    let found = (0..n)
        .permutations(n)
        .filter(|p| covers.iter().all(|&(lo, hi)| covers.contains(&(p[lo], p[hi]))))
        .map(Permutation)
        .collect();
    Ok(PermSet::from_vec(found))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BeatKind {
    /// `U_x \ {x}` has a maximum.
    Down,
    /// `F_x \ {x}` has a minimum.
    Up,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BeatPoint {
    pub point: usize,
    pub kind: BeatKind,
}

/// All beat points in ascending point order, down before up for a point
/// that is both. `U_x \ {x}` has a maximum exactly when `x` has a single
/// lower cover (dually for up-beat points).
pub fn beat_points(poset: &Poset) -> Vec<BeatPoint> {
    let mut out = Vec::new();
    for x in 0..poset.len() {
        if poset.lower_covers(x).len() == 1 {
            out.push(BeatPoint {
                point: x,
                kind: BeatKind::Down,
            });
        }
        if poset.upper_covers(x).len() == 1 {
            out.push(BeatPoint {
                point: x,
                kind: BeatKind::Up,
            });
        }
    }
    out
}

pub fn is_minimal(poset: &Poset) -> bool {
    beat_points(poset).is_empty()
}

/// One step of a core reduction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Removal {
    pub label: String,
    pub kind: BeatKind,
}

/// Repeatedly removes the lowest-index beat point until none remain.
pub fn core(poset: &Poset) -> (Poset, Vec<Removal>) {
    let mut current = poset.clone();
    let mut trace = Vec::new();
    while let Some(beat) = beat_points(&current).into_iter().next() {
        trace.push(Removal {
            label: current.label(beat.point).to_string(),
            kind: beat.kind,
        });
        let keep: Vec<usize> = (0..current.len()).filter(|&x| x != beat.point).collect();
        current = current
            .induced_subposet(&keep)
            .expect("a subposet of a valid poset is valid");
    }
    (current, trace)
}

/// `𝓔(X)` represented as `Aut(core(X))`.
#[derive(Clone, Debug)]
pub struct SelfEquivalences {
    pub core: Poset,
    pub trace: Vec<Removal>,
    pub group: PermSet,
}

pub fn self_equivalences(poset: &Poset) -> SelfEquivalences {
    let (core, trace) = core(poset);
    let group = enumerate_automorphisms(&core);
    SelfEquivalences { core, trace, group }
}
