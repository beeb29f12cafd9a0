//! Finite groups as Cayley tables, retractions as idempotent endomorphisms,
//! and the ordered generating systems that index the realization's arms.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default largest order accepted by [`groups_isomorphic`].
pub const DEFAULT_ISO_BOUND: usize = 16;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("group table is empty")]
    Empty,
    #[error("table row {row} has length {len}, expected {order}")]
    Ragged { row: usize, len: usize, order: usize },
    #[error("table entry {value} at ({a}, {b}) is not an element")]
    NotClosed { a: usize, b: usize, value: usize },
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("table is not a Latin square: {0}")]
    NotLatin(String),
    #[error("table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("invalid group spec {0:?}")]
    BadSpec(String),
    #[error("endomorphism has {len} entries, group has order {order}")]
    EndoLength { len: usize, order: usize },
    #[error("endomorphism image {value} of {g} is not an element")]
    EndoOutOfRange { g: usize, value: usize },
    #[error("map is not a homomorphism: f({a}*{b}) != f({a})*f({b})")]
    NotHomomorphism { a: usize, b: usize },
    #[error("map is not idempotent: f(f({0})) != f({0})")]
    NotIdempotent(usize),
    #[error("invalid generators: {0}")]
    BadGenerators(String),
    #[error("isomorphism test bound exceeded: order {order} > {bound}")]
    IsoBoundExceeded { order: usize, bound: usize },
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("malformed file {path}: {message}")]
    Format { path: PathBuf, message: String },
}

/// A finite group on elements `0..order`, stored as a flat multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct TableFile {
    order: usize,
    table: Vec<Vec<usize>>,
}

impl FiniteGroup {
    /// Validates closure, identity, the Latin property and associativity (O(n³)).
    pub fn from_table(name: impl Into<String>, rows: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let order = rows.len();
        if order == 0 {
            return Err(GroupError::Empty);
        }
        let mut table = Vec::with_capacity(order * order);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::Ragged {
                    row: a,
                    len: row.len(),
                    order,
                });
            }
            for (b, &value) in row.iter().enumerate() {
                if value >= order {
                    return Err(GroupError::NotClosed { a, b, value });
                }
            }
            table.extend_from_slice(row);
        }
        let at = |a: usize, b: usize| table[a * order + b];

        let identity = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or(GroupError::NoIdentity)?;

        for i in 0..order {
            let mut row_seen = vec![false; order];
            let mut col_seen = vec![false; order];
            for j in 0..order {
                if std::mem::replace(&mut row_seen[at(i, j)], true) {
                    return Err(GroupError::NotLatin(format!("row {i} repeats {}", at(i, j))));
                }
                if std::mem::replace(&mut col_seen[at(j, i)], true) {
                    return Err(GroupError::NotLatin(format!("column {i} repeats {}", at(j, i))));
                }
            }
        }

        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }

        let inverses = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| at(a, b) == identity)
                    .expect("Latin row contains identity")
            })
            .collect();

        Ok(Self {
            name: name.into(),
            order,
            table,
            identity,
            inverses,
        })
    }

    /// Reads `{"order": n, "table": [[...], ...]}`.
    pub fn from_table_file(path: &Path) -> Result<Self, GroupError> {
        let text = std::fs::read_to_string(path).map_err(|source| GroupError::Io {
            path: path.to_owned(),
            source,
        })?;
        let file: TableFile = serde_json::from_str(&text).map_err(|e| GroupError::Format {
            path: path.to_owned(),
            message: e.to_string(),
        })?;
        if file.order != file.table.len() {
            return Err(GroupError::Format {
                path: path.to_owned(),
                message: format!("order {} but {} rows", file.order, file.table.len()),
            });
        }
        Self::from_table(format!("table:{}", path.display()), file.table)
    }

    pub fn to_table_json(&self) -> String {
        let file = TableFile {
            order: self.order,
            table: self.table.chunks(self.order).map(<[usize]>::to_vec).collect(),
        };
        serde_json::to_string(&file).expect("table serializes")
    }

    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::BadSpec("cyclic:0".into()));
        }
        let rows = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table(format!("cyclic:{n}"), rows)
    }

    /// Dihedral group of order `2n`; element `a + n*b` is `r^a s^b`.
    pub fn dihedral(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::BadSpec("dihedral:0".into()));
        }
        let mul = |x: usize, y: usize| {
            let (a, b) = (x % n, x / n);
            let (c, d) = (y % n, y / n);
            let rot = if b == 0 { (a + c) % n } else { (a + n - c) % n };
            rot + n * ((b + d) % 2)
        };
        let rows = (0..2 * n).map(|x| (0..2 * n).map(|y| mul(x, y)).collect()).collect();
        Self::from_table(format!("dihedral:{n}"), rows)
    }

    /// Symmetric group on `k` letters; elements are permutations in
    /// lexicographic order (so 0 is the identity) and `(στ)(x) = σ(τ(x))`.
    pub fn symmetric(k: usize) -> Result<Self, GroupError> {
        if k == 0 {
            return Err(GroupError::BadSpec("symmetric:0".into()));
        }
        let perms: Vec<Vec<usize>> = (0..k).permutations(k).collect();
        let index: HashMap<&[usize], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
        let rows = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| {
                        let st: Vec<usize> = t.iter().map(|&x| s[x]).collect();
                        index[st.as_slice()]
                    })
                    .collect()
            })
            .collect();
        Self::from_table(format!("symmetric:{k}"), rows)
    }

    /// Direct product; element `(a, b)` has index `a * |right| + b`.
    pub fn product(left: &FiniteGroup, right: &FiniteGroup) -> Result<Self, GroupError> {
        let n2 = right.order;
        let n = left.order * n2;
        let rows = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| left.mul(x / n2, y / n2) * n2 + right.mul(x % n2, y % n2))
                    .collect()
            })
            .collect();
        Self::from_table(format!("product:{},{}", left.name, right.name), rows)
    }

    /// The subgroup on `elements` (which must be closed), reindexed in
    /// ascending element order.
    pub fn subgroup(&self, elements: &[usize]) -> Result<Self, GroupError> {
        let position: HashMap<usize, usize> = elements.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let rows = elements
            .iter()
            .enumerate()
            .map(|(a, &x)| {
                elements
                    .iter()
                    .enumerate()
                    .map(|(b, &y)| {
                        let value = self.mul(x, y);
                        position
                            .get(&value)
                            .copied()
                            .ok_or(GroupError::NotClosed { a, b, value })
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_table(format!("subgroup of {}", self.name), rows)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Element order → number of elements of that order.
    pub fn order_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for a in self.elements() {
            *hist.entry(self.element_order(a)).or_insert(0) += 1;
        }
        hist
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .tuple_combinations()
            .all(|(a, b)| self.mul(a, b) == self.mul(b, a))
    }

    /// Smallest subgroup containing `seed`, sorted ascending.
    pub fn subgroup_closure(&self, seed: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order];
        member[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        // In a finite group, closing under right multiplication by the seed
        // already yields inverses.
        while let Some(x) = queue.pop_front() {
            for &s in seed {
                let y = self.mul(x, s);
                if !std::mem::replace(&mut member[y], true) {
                    queue.push_back(y);
                }
            }
        }
        (0..self.order).filter(|&g| member[g]).collect()
    }
}

/// Named group description, e.g. `cyclic:6` or `product:cyclic:2,cyclic:2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Product(Vec<GroupSpec>),
    Table(PathBuf),
}

impl FromStr for GroupSpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GroupError::BadSpec(s.to_string());
        let (kind, arg) = s.split_once(':').ok_or_else(bad)?;
        let number = || arg.trim().parse::<usize>().map_err(|_| bad());
        match kind.trim() {
            "cyclic" => Ok(GroupSpec::Cyclic(number()?)),
            "dihedral" => Ok(GroupSpec::Dihedral(number()?)),
            "symmetric" => Ok(GroupSpec::Symmetric(number()?)),
            "table" => Ok(GroupSpec::Table(PathBuf::from(arg))),
            "product" => {
                let factors = arg
                    .split(',')
                    .map(|part| match part.parse()? {
                        GroupSpec::Product(_) => Err(bad()),
                        spec => Ok(spec),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if factors.len() < 2 {
                    return Err(bad());
                }
                Ok(GroupSpec::Product(factors))
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Symmetric(k) => write!(f, "symmetric:{k}"),
            GroupSpec::Table(p) => write!(f, "table:{}", p.display()),
            GroupSpec::Product(parts) => write!(f, "product:{}", parts.iter().join(",")),
        }
    }
}

pub fn make_group(spec: &GroupSpec) -> Result<FiniteGroup, GroupError> {
    let mut group = match spec {
        GroupSpec::Cyclic(n) => FiniteGroup::cyclic(*n)?,
        GroupSpec::Dihedral(n) => FiniteGroup::dihedral(*n)?,
        GroupSpec::Symmetric(k) => FiniteGroup::symmetric(*k)?,
        GroupSpec::Table(path) => FiniteGroup::from_table_file(path)?,
        GroupSpec::Product(parts) => {
            let mut groups = parts.iter().map(make_group);
            let first = groups.next().ok_or_else(|| GroupError::BadSpec(spec.to_string()))??;
            groups.try_fold(first, |acc, g| FiniteGroup::product(&acc, &g?))?
        }
    };
    group.name = spec.to_string();
    Ok(group)
}

/// Isomorphism test for small groups: backtracks over images of a greedy
/// generating set, pruned by element order, and extends each candidate
/// along the Cayley graph.
pub fn groups_isomorphic(g1: &FiniteGroup, g2: &FiniteGroup, bound: usize) -> Result<bool, GroupError> {
    let order = g1.order().max(g2.order());
    if order > bound {
        return Err(GroupError::IsoBoundExceeded { order, bound });
    }
    if g1.order() != g2.order() || g1.order_histogram() != g2.order_histogram() {
        return Ok(false);
    }
    let gens = greedy_generators(g1, &g1.elements().collect::<Vec<_>>());
    let orders2: Vec<usize> = g2.elements().map(|x| g2.element_order(x)).collect();
    let mut images = Vec::with_capacity(gens.len());
    Ok(search_images(g1, g2, &gens, &orders2, &mut images))
}

fn search_images(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    gens: &[usize],
    orders2: &[usize],
    images: &mut Vec<usize>,
) -> bool {
    let depth = images.len();
    if depth == gens.len() {
        return extends_to_isomorphism(g1, g2, gens, images);
    }
    let wanted = g1.element_order(gens[depth]);
    for candidate in g2.elements() {
        if orders2[candidate] != wanted || images.contains(&candidate) {
            continue;
        }
        images.push(candidate);
        if search_images(g1, g2, gens, orders2, images) {
            return true;
        }
        images.pop();
    }
    false
}

fn extends_to_isomorphism(g1: &FiniteGroup, g2: &FiniteGroup, gens: &[usize], images: &[usize]) -> bool {
    let n = g1.order();
    let mut map = vec![usize::MAX; n];
    map[g1.identity()] = g2.identity();
    let mut queue = VecDeque::from([g1.identity()]);
    while let Some(x) = queue.pop_front() {
        for (&s, &t) in gens.iter().zip(images) {
            let y = g1.mul(x, s);
            let image = g2.mul(map[x], t);
            if map[y] == usize::MAX {
                map[y] = image;
                queue.push_back(y);
            } else if map[y] != image {
                return false;
            }
        }
    }
    let mut hit = vec![false; n];
    for &v in &map {
        if v == usize::MAX || std::mem::replace(&mut hit[v], true) {
            return false;
        }
    }
    (0..n).all(|a| (0..n).all(|b| map[g1.mul(a, b)] == g2.mul(map[a], map[b])))
}

/// Adds elements of `subgroup` by descending order (ties: smallest index)
/// until they generate it. Returns an empty list for the trivial subgroup.
fn greedy_generators(group: &FiniteGroup, subgroup: &[usize]) -> Vec<usize> {
    let mut candidates: Vec<usize> = subgroup.iter().copied().filter(|&g| g != group.identity()).collect();
    candidates.sort_by_key(|&g| (std::cmp::Reverse(group.element_order(g)), g));
    let mut chosen = Vec::new();
    let mut closure = vec![group.identity()];
    for g in candidates {
        if closure.len() == subgroup.len() {
            break;
        }
        if closure.binary_search(&g).is_err() {
            chosen.push(g);
            closure = group.subgroup_closure(&chosen);
        }
    }
    chosen
}

/// A retraction `r: G → H` encoded as an idempotent endomorphism of `G`;
/// `H` is identified with the image `i(H) ≤ G`.
#[derive(Clone, Debug)]
pub struct Retraction {
    group: FiniteGroup,
    endo: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct EndoFile {
    endo: Vec<usize>,
}

impl Retraction {
    pub fn new(group: FiniteGroup, endo: Vec<usize>) -> Result<Self, GroupError> {
        let n = group.order();
        if endo.len() != n {
            return Err(GroupError::EndoLength {
                len: endo.len(),
                order: n,
            });
        }
        if let Some((g, &value)) = endo.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(GroupError::EndoOutOfRange { g, value });
        }
        for a in 0..n {
            for b in 0..n {
                if endo[group.mul(a, b)] != group.mul(endo[a], endo[b]) {
                    return Err(GroupError::NotHomomorphism { a, b });
                }
            }
        }
        if let Some(g) = (0..n).find(|&g| endo[endo[g]] != endo[g]) {
            return Err(GroupError::NotIdempotent(g));
        }
        Ok(Self { group, endo })
    }

    pub fn identity(group: FiniteGroup) -> Self {
        let endo = group.elements().collect();
        Self { group, endo }
    }

    pub fn trivial(group: FiniteGroup) -> Self {
        let endo = vec![group.identity(); group.order()];
        Self { group, endo }
    }

    /// Reads `{"endo": [img_0, ..., img_{n-1}]}`.
    pub fn from_file(group: FiniteGroup, path: &Path) -> Result<Self, GroupError> {
        let text = std::fs::read_to_string(path).map_err(|source| GroupError::Io {
            path: path.to_owned(),
            source,
        })?;
        let file: EndoFile = serde_json::from_str(&text).map_err(|e| GroupError::Format {
            path: path.to_owned(),
            message: e.to_string(),
        })?;
        Self::new(group, file.endo)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn endo(&self) -> &[usize] {
        &self.endo
    }

    pub fn apply(&self, g: usize) -> usize {
        self.endo[g]
    }

    pub fn kernel(&self) -> Vec<usize> {
        let e = self.group.identity();
        self.group.elements().filter(|&g| self.endo[g] == e).collect()
    }

    /// `i(H)`: the image, which is also the fixed-point set.
    pub fn image(&self) -> Vec<usize> {
        self.group.elements().filter(|&g| self.endo[g] == g).collect()
    }

    /// `G = ker(r)·i(H)` and `ker(r) ∩ i(H) = {e}`, checked exhaustively.
    pub fn decomposition_check(&self) -> bool {
        let kernel = self.kernel();
        let image = self.image();
        let mut covered = vec![false; self.group.order()];
        for &k in &kernel {
            for &h in &image {
                covered[self.group.mul(k, h)] = true;
            }
        }
        let meet: Vec<usize> = kernel.iter().copied().filter(|k| image.contains(k)).collect();
        covered.iter().all(|&c| c) && meet == [self.group.identity()]
    }
}

/// How the retraction is chosen on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RetractionSpec {
    Identity,
    Trivial,
    File(PathBuf),
}

impl FromStr for RetractionSpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "identity" => Ok(Self::Identity),
            "trivial" => Ok(Self::Trivial),
            _ => s
                .strip_prefix("file:")
                .map(|p| Self::File(PathBuf::from(p)))
                .ok_or_else(|| GroupError::BadSpec(s.to_string())),
        }
    }
}

impl RetractionSpec {
    pub fn build(&self, group: FiniteGroup) -> Result<Retraction, GroupError> {
        match self {
            Self::Identity => Ok(Retraction::identity(group)),
            Self::Trivial => Ok(Retraction::trivial(group)),
            Self::File(path) => Retraction::from_file(group, path),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum GeneratorStrategy {
    #[default]
    Greedy,
    All,
}

/// Ordered generating system `S = S1 ++ S2 = (s_1, ..., s_m)` with `S1`
/// generating the kernel and `S2` the image. Position in `S` decides which
/// arm of the realization a generator glues.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    #[serde(rename = "S1")]
    s1: Vec<usize>,
    #[serde(rename = "S2")]
    s2: Vec<usize>,
}

impl GeneratorSpec {
    /// Explicit choice; checks every invariant against `retraction`.
    pub fn new(retraction: &Retraction, s1: Vec<usize>, s2: Vec<usize>) -> Result<Self, GroupError> {
        let spec = Self { s1, s2 };
        spec.validate(retraction)?;
        Ok(spec)
    }

    pub fn validate(&self, retraction: &Retraction) -> Result<(), GroupError> {
        let group = retraction.group();
        let bad = |msg: String| Err(GroupError::BadGenerators(msg));
        let all = self.all();
        if let Some(&g) = all.iter().find(|&&g| g >= group.order()) {
            return bad(format!("{g} is not an element"));
        }
        if all.contains(&group.identity()) {
            return bad("the identity cannot be a generator".into());
        }
        if all.iter().duplicates().next().is_some() {
            return bad("generators must be pairwise distinct".into());
        }
        if group.subgroup_closure(&self.s1) != retraction.kernel() {
            return bad(format!("S1 = {:?} does not generate the kernel", self.s1));
        }
        if group.subgroup_closure(&self.s2) != retraction.image() {
            return bad(format!("S2 = {:?} does not generate the image", self.s2));
        }
        Ok(())
    }

    pub fn default_for(retraction: &Retraction, strategy: GeneratorStrategy) -> Self {
        let group = retraction.group();
        let pick = |subgroup: Vec<usize>| match strategy {
            GeneratorStrategy::Greedy => greedy_generators(group, &subgroup),
            GeneratorStrategy::All => subgroup.into_iter().filter(|&g| g != group.identity()).collect(),
        };
        Self {
            s1: pick(retraction.kernel()),
            s2: pick(retraction.image()),
        }
    }

    pub fn s1(&self) -> &[usize] {
        &self.s1
    }

    pub fn s2(&self) -> &[usize] {
        &self.s2
    }

    /// `(s_1, ..., s_m)`.
    pub fn all(&self) -> Vec<usize> {
        self.s1.iter().chain(&self.s2).copied().collect()
    }

    pub fn m(&self) -> usize {
        self.s1.len() + self.s2.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z6_retraction() -> Retraction {
        let g = FiniteGroup::cyclic(6).unwrap();
        let endo = (0..6).map(|x| 4 * x % 6).collect();
        Retraction::new(g, endo).unwrap()
    }

    /// Index of the permutation with the given images in `symmetric(3)`.
    fn s3_index(images: [usize; 3]) -> usize {
        (0..3usize).permutations(3).position(|p| p == images).unwrap()
    }

    fn s3_sign_retraction() -> Retraction {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let transposition = s3_index([1, 0, 2]);
        let endo = (0..3usize)
            .permutations(3)
            .map(|p| {
                let inversions = (0..3).tuple_combinations().filter(|&(i, j)| p[i] > p[j]).count();
                if inversions % 2 == 0 {
                    0
                } else {
                    transposition
                }
            })
            .collect();
        Retraction::new(s3, endo).unwrap()
    }

    #[test]
    fn cyclic_six_orders() {
        let g = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(g.order(), 6);
        // brute-force orders: smallest k with k*x ≡ 0 (mod 6)
        let expected: BTreeMap<usize, usize> =
            (0..6)
                .map(|x| (1..=6).find(|k| k * x % 6 == 0).unwrap())
                .fold(BTreeMap::new(), |mut m, o| {
                    *m.entry(o).or_insert(0) += 1;
                    m
                });
        assert_eq!(expected, BTreeMap::from([(1, 1), (2, 1), (3, 2), (6, 2)]));
        assert_eq!(g.order_histogram(), expected);
    }

    #[test]
    fn symmetric_three_is_nonabelian() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.identity(), 0);
        assert!(!s3.is_abelian());
        assert!(FiniteGroup::cyclic(6).unwrap().is_abelian());
    }

    #[test]
    fn dihedral_four() {
        let d4 = FiniteGroup::dihedral(4).unwrap();
        assert_eq!(d4.order(), 8);
        assert!(!d4.is_abelian());
        assert_eq!(d4.order_histogram(), BTreeMap::from([(1, 1), (2, 5), (4, 2)]));
    }

    #[test]
    fn invalid_tables() {
        // x*y = x - y mod 3: Latin, identity only on the right.
        let sub: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (a + 3 - b) % 3).collect()).collect();
        assert!(matches!(FiniteGroup::from_table("t", sub), Err(GroupError::NoIdentity)));
        // A Latin square with identity 0 that is not associative (order 5 loop).
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_table("t", loop5),
            Err(GroupError::NotAssociative { .. })
        ));
        let not_latin = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(
            FiniteGroup::from_table("t", not_latin),
            Err(GroupError::NotLatin(_))
        ));
        assert!(matches!(FiniteGroup::from_table("t", vec![]), Err(GroupError::Empty)));
        assert!(matches!(
            FiniteGroup::from_table("t", vec![vec![0, 5], vec![1, 0]]),
            Err(GroupError::NotClosed { .. })
        ));
    }

    #[test]
    fn spec_parsing() {
        assert_eq!("cyclic:6".parse::<GroupSpec>().unwrap(), GroupSpec::Cyclic(6));
        let p: GroupSpec = "product:cyclic:2,cyclic:2".parse().unwrap();
        assert_eq!(p.to_string(), "product:cyclic:2,cyclic:2");
        assert_eq!(make_group(&p).unwrap().order(), 4);
        assert_eq!(
            make_group(&"symmetric:3".parse().unwrap()).unwrap().name(),
            "symmetric:3"
        );
        assert!("cyclic".parse::<GroupSpec>().is_err());
        assert!("cyclic:x".parse::<GroupSpec>().is_err());
        assert!("product:cyclic:2".parse::<GroupSpec>().is_err());
        assert!("klein:4".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn closures() {
        let z6 = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(z6.subgroup_closure(&[2]), vec![0, 2, 4]);
        assert_eq!(z6.subgroup_closure(&[]), vec![0]);
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let seed = [s3_index([1, 0, 2]), s3_index([1, 2, 0])];
        assert_eq!(s3.subgroup_closure(&seed), (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn z6_retraction_kernel_and_image() {
        let r = z6_retraction();
        assert_eq!(r.image(), vec![0, 2, 4]);
        assert_eq!(r.kernel(), vec![0, 3]);
        assert!(r.decomposition_check());
    }

    #[test]
    fn identity_and_trivial_retractions() {
        let g = FiniteGroup::dihedral(3).unwrap();
        let id = Retraction::identity(g.clone());
        assert_eq!(id.kernel(), vec![0]);
        assert_eq!(id.image().len(), 6);
        assert!(id.decomposition_check());
        let tr = Retraction::trivial(g);
        assert_eq!(tr.kernel().len(), 6);
        assert_eq!(tr.image(), vec![0]);
        assert!(tr.decomposition_check());
    }

    #[test]
    fn s3_sign_section() {
        let r = s3_sign_retraction();
        assert_eq!(r.image(), vec![0, s3_index([1, 0, 2])]);
        let kernel = r.kernel();
        assert_eq!(kernel.len(), 3);
        // kernel is A3: the identity and the two 3-cycles
        let s3 = r.group();
        assert!(kernel.iter().all(|&k| s3.element_order(k) != 2));
        assert!(r.decomposition_check());
    }

    #[test]
    fn retraction_rejections() {
        let z6 = FiniteGroup::cyclic(6).unwrap();
        // x -> 2x is a homomorphism but 2(2x) != 2x
        let doubling = (0..6).map(|x| 2 * x % 6).collect();
        assert!(matches!(
            Retraction::new(z6.clone(), doubling),
            Err(GroupError::NotIdempotent(_))
        ));
        assert!(matches!(
            Retraction::new(z6.clone(), vec![0, 1, 0, 0, 0, 0]),
            Err(GroupError::NotHomomorphism { .. })
        ));
        assert!(matches!(
            Retraction::new(z6.clone(), vec![0; 5]),
            Err(GroupError::EndoLength { .. })
        ));
        assert!(matches!(
            Retraction::new(z6, vec![9; 6]),
            Err(GroupError::EndoOutOfRange { .. })
        ));
    }

    #[test]
    fn greedy_generators_for_z6() {
        let gens = GeneratorSpec::default_for(&z6_retraction(), GeneratorStrategy::Greedy);
        assert_eq!(gens.s1(), &[3]);
        assert_eq!(gens.s2(), &[2]);
        assert_eq!(gens.m(), 2);
        assert_eq!(gens.all(), vec![3, 2]);
    }

    #[test]
    fn generators_for_z2() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let id = GeneratorSpec::default_for(&Retraction::identity(z2.clone()), GeneratorStrategy::Greedy);
        assert_eq!((id.s1(), id.s2()), (&[][..], &[1][..]));
        let tr = GeneratorSpec::default_for(&Retraction::trivial(z2), GeneratorStrategy::Greedy);
        assert_eq!((tr.s1(), tr.s2()), (&[1][..], &[][..]));
    }

    #[test]
    fn all_strategy_and_validation() {
        let r = z6_retraction();
        let all = GeneratorSpec::default_for(&r, GeneratorStrategy::All);
        assert_eq!(all.all(), vec![3, 2, 4]);
        all.validate(&r).unwrap();
        assert!(GeneratorSpec::new(&r, vec![3], vec![0, 2]).is_err());
        assert!(GeneratorSpec::new(&r, vec![], vec![2]).is_err());
        assert!(GeneratorSpec::new(&r, vec![3], vec![3]).is_err());
        assert!(GeneratorSpec::new(&r, vec![3], vec![4]).is_ok());
    }

    #[test]
    fn isomorphism_search() {
        let z6 = FiniteGroup::cyclic(6).unwrap();
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let v4 = FiniteGroup::product(&z2, &z2).unwrap();
        let z2z3 = FiniteGroup::product(&z2, &z3).unwrap();
        assert!(!groups_isomorphic(&z6, &s3, DEFAULT_ISO_BOUND).unwrap());
        assert!(!groups_isomorphic(&z4, &v4, DEFAULT_ISO_BOUND).unwrap());
        assert!(groups_isomorphic(&z6, &z2z3, DEFAULT_ISO_BOUND).unwrap());
        assert!(groups_isomorphic(&z2z3, &z6, DEFAULT_ISO_BOUND).unwrap());
        let d3 = FiniteGroup::dihedral(3).unwrap();
        assert!(groups_isomorphic(&d3, &s3, DEFAULT_ISO_BOUND).unwrap());
        let s4 = FiniteGroup::symmetric(4).unwrap();
        assert!(matches!(
            groups_isomorphic(&s4, &s4, DEFAULT_ISO_BOUND),
            Err(GroupError::IsoBoundExceeded { order: 24, bound: 16 })
        ));
        assert!(groups_isomorphic(&s4, &s4, 24).unwrap());
    }

    #[test]
    fn subgroup_reindexing() {
        let r = z6_retraction();
        let h = r.group().subgroup(&r.image()).unwrap();
        assert!(groups_isomorphic(&h, &FiniteGroup::cyclic(3).unwrap(), DEFAULT_ISO_BOUND).unwrap());
        assert!(r.group().subgroup(&[0, 1]).is_err());
    }
}
