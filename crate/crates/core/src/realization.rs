//! The height-1 space `X_r` built from a group retraction.
//!
//! Each element `g` owns a gadget `C_g`: a spine of tops `(g,k)` and stars
//! `(g,*i)`, one zigzag arm per generator whose length grows with its
//! position, and a fixed seven-point arm hanging off `(g,-1)`. The i-th arm
//! of `C_g` is glued to the base star of `C_{g·s_i}`. Left translation of the
//! first coordinate gives the action `T`, and applying the retraction to the
//! first coordinate gives the topological retraction `r̄`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::automorphisms::Permutation;
use crate::group::{make_group, FiniteGroup, GeneratorSpec, GroupError, GroupSpec, Retraction};
use crate::poset::{Poset, PosetError};

#[derive(Debug, Error)]
pub enum RealizationError {
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("construction invariant violated: {0}")]
    Invariant(String),
}

/// Structured name of a point of `X_r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointLabel {
    /// `(g, k)` for `k ∈ {-1, 0, ..., m}`.
    Top { g: usize, k: isize },
    /// `(g, *i)` for `i ∈ {0, ..., m}`.
    Star { g: usize, i: usize },
    /// `(g, i, j)` for `i ∈ {1, ..., m}`, `j ∈ {0, ..., i+8}`.
    Arm { g: usize, i: usize, j: usize },
    /// `(g, -1, t)` for `t ∈ {0, ..., 6}`.
    NegArm { g: usize, t: usize },
}

impl PointLabel {
    pub fn element(&self) -> usize {
        match *self {
            PointLabel::Top { g, .. }
            | PointLabel::Star { g, .. }
            | PointLabel::Arm { g, .. }
            | PointLabel::NegArm { g, .. } => g,
        }
    }

    /// Same label with the first coordinate replaced.
    pub fn with_element(self, g: usize) -> Self {
        match self {
            PointLabel::Top { k, .. } => PointLabel::Top { g, k },
            PointLabel::Star { i, .. } => PointLabel::Star { g, i },
            PointLabel::Arm { i, j, .. } => PointLabel::Arm { g, i, j },
            PointLabel::NegArm { t, .. } => PointLabel::NegArm { g, t },
        }
    }
}

impl fmt::Display for PointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PointLabel::Top { g, k } => write!(f, "{g}:{k}"),
            PointLabel::Star { g, i } => write!(f, "{g}:*{i}"),
            PointLabel::Arm { g, i, j } => write!(f, "{g}:{i}:{j}"),
            PointLabel::NegArm { g, t } => write!(f, "{g}:-1:{t}"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("not a point label: {0:?}")]
pub struct LabelParseError(String);

impl FromStr for PointLabel {
    type Err = LabelParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LabelParseError(s.to_string());
        let parts: Vec<&str> = s.split(':').collect();
        let num = |p: &str| p.parse::<usize>().map_err(|_| bad());
        match parts.as_slice() {
            [g, star] if star.starts_with('*') => Ok(PointLabel::Star {
                g: num(g)?,
                i: num(&star[1..])?,
            }),
            [g, k] => Ok(PointLabel::Top {
                g: num(g)?,
                k: k.parse::<isize>().ok().filter(|&k| k >= -1).ok_or_else(bad)?,
            }),
            [g, "-1", t] => Ok(PointLabel::NegArm { g: num(g)?, t: num(t)? }),
            [g, i, j] => Ok(PointLabel::Arm {
                g: num(g)?,
                i: num(i)?,
                j: num(j)?,
            }),
            _ => Err(bad()),
        }
    }
}

/// Local indexing of the `m(m+1)/2 + 11m + 10` points of one gadget:
/// tops `-1..=m`, stars `0..=m`, arms `1..=m`, then the seven `-1` arm points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComponentLayout {
    m: usize,
}

impl ComponentLayout {
    pub fn new(m: usize) -> Self {
        Self { m }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn size(&self) -> usize {
        let m = self.m;
        m * (m + 1) / 2 + 11 * m + 10
    }

    fn star_offset(&self) -> usize {
        self.m + 2
    }

    fn arm_offset(&self, i: usize) -> usize {
        2 * self.m + 3 + (i - 1) * i / 2 + 9 * (i - 1)
    }

    fn neg_offset(&self) -> usize {
        self.arm_offset(self.m + 1)
    }

    /// Position of `label` inside its gadget, or `None` if out of range.
    pub fn local_index(&self, label: &PointLabel) -> Option<usize> {
        let m = self.m;
        match *label {
            PointLabel::Top { k, .. } if (-1..=m as isize).contains(&k) => Some((k + 1) as usize),
            PointLabel::Star { i, .. } if i <= m => Some(self.star_offset() + i),
            PointLabel::Arm { i, j, .. } if (1..=m).contains(&i) && j <= i + 8 => Some(self.arm_offset(i) + j),
            PointLabel::NegArm { t, .. } if t <= 6 => Some(self.neg_offset() + t),
            _ => None,
        }
    }

    pub fn local_label(&self, g: usize, local: usize) -> PointLabel {
        let m = self.m;
        if local < self.star_offset() {
            PointLabel::Top {
                g,
                k: local as isize - 1,
            }
        } else if local < self.arm_offset(1) {
            PointLabel::Star {
                g,
                i: local - self.star_offset(),
            }
        } else if local < self.neg_offset() {
            let i = (1..=m)
                .rev()
                .find(|&i| local >= self.arm_offset(i))
                .expect("local index lies in an arm");
            PointLabel::Arm {
                g,
                i,
                j: local - self.arm_offset(i),
            }
        } else {
            assert!(local < self.size(), "local index {local} outside the gadget");
            PointLabel::NegArm {
                g,
                t: local - self.neg_offset(),
            }
        }
    }
}

/// Covers of the gadget `C_g` with `m` arms, as `(lower, upper)` label pairs.
pub fn build_component(g: usize, m: usize) -> Vec<(PointLabel, PointLabel)> {
    let top = |k: isize| PointLabel::Top { g, k };
    let star = |i: usize| PointLabel::Star { g, i };
    let arm = |i: usize, j: usize| PointLabel::Arm { g, i, j };
    let neg = |t: usize| PointLabel::NegArm { g, t };
    let mut covers = Vec::new();

    // spine: (g,-1) > (g,*0) < (g,0) > (g,*1) < (g,1) > ... < (g,m)
    covers.push((star(0), top(-1)));
    covers.push((star(0), top(0)));
    for i in 1..=m {
        covers.push((star(i), top(i as isize - 1)));
        covers.push((star(i), top(i as isize)));
    }

    // arms: (g,i) > (g,i,0) < (g,i,1) > ... ; even j sit below odd j
    let zig = |a: PointLabel, ja: usize, b: PointLabel| if ja.is_multiple_of(2) { (a, b) } else { (b, a) };
    for i in 1..=m {
        covers.push((arm(i, 0), top(i as isize)));
        for j in 0..i + 8 {
            covers.push(zig(arm(i, j), j, arm(i, j + 1)));
        }
        covers.push(zig(arm(i, i + 5), i + 5, arm(i, i + 8)));
        covers.push(zig(arm(i, i + 1), i + 1, arm(i, i + 6)));
    }

    for i in 1..=m {
        covers.push((star(0), top(i as isize)));
    }

    // -1 arm: (g,-1) > (g,-1,0) < (g,-1,1) > ... > (g,-1,6), plus two extras
    covers.push((neg(0), top(-1)));
    for t in 0..6 {
        covers.push(zig(neg(t), t, neg(t + 1)));
    }
    covers.push((neg(4), top(-1)));
    covers.push((neg(6), neg(3)));
    covers
}

/// A single gadget `C_g` as a poset.
pub fn component_poset(g: usize, m: usize) -> Result<Poset, PosetError> {
    let layout = ComponentLayout::new(m);
    let labels = (0..layout.size())
        .map(|l| layout.local_label(g, l).to_string())
        .collect();
    let covers = build_component(g, m)
        .into_iter()
        .map(|(lo, hi)| {
            (
                layout.local_index(&lo).expect("label in range"),
                layout.local_index(&hi).expect("label in range"),
            )
        })
        .collect();
    Poset::new(labels, covers)
}

/// Everything needed to rebuild a space from files: `{"group", "endo",
/// "S1", "S2", "m", "cardinality"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub group: String,
    pub endo: Vec<usize>,
    #[serde(rename = "S1")]
    pub s1: Vec<usize>,
    #[serde(rename = "S2")]
    pub s2: Vec<usize>,
    pub m: usize,
    pub cardinality: usize,
}

/// `X_r` together with the data it was built from.
#[derive(Clone, Debug)]
pub struct RealizationSpace {
    poset: Poset,
    retraction: Retraction,
    gens: GeneratorSpec,
    layout: ComponentLayout,
}

impl RealizationSpace {
    /// Disjoint union of the gadgets `C_g` plus the gluing covers
    /// `(g·s_i, *0) < (g, i)`.
    pub fn build(retraction: Retraction, gens: GeneratorSpec) -> Result<Self, RealizationError> {
        gens.validate(&retraction)?;
        let group = retraction.group();
        let n = group.order();
        let s = gens.all();
        let layout = ComponentLayout::new(s.len());
        let size = layout.size();
        let index = |label: PointLabel| label.element() * size + layout.local_index(&label).expect("label in range");

        let labels: Vec<String> = (0..n * size)
            .map(|x| layout.local_label(x / size, x % size).to_string())
            .collect();
        let mut covers = Vec::with_capacity(n * (size + s.len()));
        for g in group.elements() {
            covers.extend(
                build_component(g, layout.m())
                    .into_iter()
                    .map(|(lo, hi)| (index(lo), index(hi))),
            );
            for (pos, &si) in s.iter().enumerate() {
                let i = pos + 1;
                covers.push((
                    index(PointLabel::Star {
                        g: group.mul(g, si),
                        i: 0,
                    }),
                    index(PointLabel::Top { g, k: i as isize }),
                ));
            }
        }
        let poset = Poset::new(labels, covers)?;

        let expected = n * (layout.m() * (layout.m() + 1) / 2 + 11 * layout.m() + 10);
        if poset.len() != expected {
            return Err(RealizationError::Invariant(format!(
                "{} points, expected {expected}",
                poset.len()
            )));
        }
        if poset.height() != 1 {
            return Err(RealizationError::Invariant(format!("height {}", poset.height())));
        }
        if !poset.is_connected()? {
            return Err(RealizationError::Invariant("space is disconnected".into()));
        }
        Ok(Self {
            poset,
            retraction,
            gens,
            layout,
        })
    }

    /// Rebuilds the space described by a manifest; the endomorphism and
    /// generators are revalidated.
    pub fn from_manifest(manifest: &Manifest) -> Result<Self, RealizationError> {
        let spec: GroupSpec = manifest.group.parse()?;
        let group = make_group(&spec)?;
        let retraction = Retraction::new(group, manifest.endo.clone())?;
        let gens = GeneratorSpec::new(&retraction, manifest.s1.clone(), manifest.s2.clone())?;
        let space = Self::build(retraction, gens)?;
        if space.poset.len() != manifest.cardinality || space.m() != manifest.m {
            return Err(RealizationError::Invariant(format!(
                "manifest says m = {}, {} points; rebuilt m = {}, {} points",
                manifest.m,
                manifest.cardinality,
                space.m(),
                space.poset.len()
            )));
        }
        Ok(space)
    }

    pub fn manifest(&self) -> Manifest {
        Manifest {
            group: self.group().name().to_string(),
            endo: self.retraction.endo().to_vec(),
            s1: self.gens.s1().to_vec(),
            s2: self.gens.s2().to_vec(),
            m: self.m(),
            cardinality: self.poset.len(),
        }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn group(&self) -> &FiniteGroup {
        self.retraction.group()
    }

    pub fn retraction(&self) -> &Retraction {
        &self.retraction
    }

    pub fn gens(&self) -> &GeneratorSpec {
        &self.gens
    }

    pub fn m(&self) -> usize {
        self.layout.m()
    }

    pub fn layout(&self) -> ComponentLayout {
        self.layout
    }

    pub fn index_of(&self, label: &PointLabel) -> Option<usize> {
        if label.element() >= self.group().order() {
            return None;
        }
        let local = self.layout.local_index(label)?;
        Some(label.element() * self.layout.size() + local)
    }

    pub fn label(&self, x: usize) -> PointLabel {
        let size = self.layout.size();
        self.layout.local_label(x / size, x % size)
    }

    /// `T(g)`: `(h, ·) ↦ (g·h, ·)`.
    pub fn action(&self, g: usize) -> Permutation {
        let size = self.layout.size();
        let images = (0..self.poset.len())
            .map(|x| self.group().mul(g, x / size) * size + x % size)
            .collect();
        Permutation::from_images(images).expect("left translation is a bijection")
    }

    /// `r̄`: `(h, ·) ↦ (r(h), ·)`, checked to be order-preserving, idempotent
    /// and the identity on its image.
    pub fn rbar(&self) -> Result<Vec<usize>, RealizationError> {
        let map = self.rbar_unchecked();
        if let Some(&(lo, hi)) = self
            .poset
            .covers()
            .iter()
            .find(|&&(lo, hi)| !self.poset.leq(map[lo], map[hi]).unwrap_or(false))
        {
            return Err(RealizationError::Invariant(format!(
                "r̄ breaks the cover {} < {}",
                self.poset.label(lo),
                self.poset.label(hi)
            )));
        }
        if let Some(x) = (0..map.len()).find(|&x| map[map[x]] != map[x]) {
            return Err(RealizationError::Invariant(format!(
                "r̄ is not idempotent at {}",
                self.poset.label(x)
            )));
        }
        Ok(map)
    }

    pub(crate) fn rbar_unchecked(&self) -> Vec<usize> {
        let size = self.layout.size();
        (0..self.poset.len())
            .map(|x| self.retraction.apply(x / size) * size + x % size)
            .collect()
    }

    /// `r̄(X_r) = ⊔_{h ∈ i(H)} C_h` as an induced subspace with its inclusion.
    pub fn image_space(&self) -> Result<ImageSpace, RealizationError> {
        let map = self.rbar()?;
        let inclusion: Vec<usize> = (0..map.len()).filter(|&x| map[x] == x).collect();
        let poset = self.poset.induced_subposet(&inclusion)?;
        let elements = self.retraction.image();
        let mut rank = vec![None; self.group().order()];
        for (pos, &h) in elements.iter().enumerate() {
            rank[h] = Some(pos);
        }
        let image = ImageSpace {
            poset,
            inclusion,
            elements,
            rank,
            layout: self.layout,
        };
        image.check_gluing(self)?;
        Ok(image)
    }
}

/// The image `Y = r̄(X_r)` and its inclusion `ī: Y → X_r`.
#[derive(Clone, Debug)]
pub struct ImageSpace {
    poset: Poset,
    inclusion: Vec<usize>,
    elements: Vec<usize>,
    rank: Vec<Option<usize>>,
    layout: ComponentLayout,
}

impl ImageSpace {
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    /// `ī` as an index map from `Y` into `X_r`.
    pub fn inclusion(&self) -> &[usize] {
        &self.inclusion
    }

    /// `i(H)`, ascending.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// The `Y` index of an `X_r` point, if it lies in `Y`.
    pub fn project(&self, x: usize) -> Option<usize> {
        let size = self.layout.size();
        self.rank.get(x / size).copied().flatten().map(|r| r * size + x % size)
    }

    /// `T_Y(h)` for `h ∈ i(H)`.
    pub fn action(&self, space: &RealizationSpace, h: usize) -> Option<Permutation> {
        self.rank[h]?;
        let t = space.action(h);
        let images = self
            .inclusion
            .iter()
            .map(|&x| self.project(t.apply(x)))
            .collect::<Option<Vec<usize>>>()?;
        Permutation::from_images(images).ok()
    }

    /// Cross-gadget covers of `Y` are exactly `(h·s_i, *0) < (h, i)` with
    /// `s_i ∈ i(H)`; kernel generators only leave the internal cover
    /// `(h, *0) < (h, i)`.
    fn check_gluing(&self, space: &RealizationSpace) -> Result<(), RealizationError> {
        let group = space.group();
        let s = space.gens().all();
        let mut expected = Vec::new();
        for &h in &self.elements {
            for (pos, &si) in s.iter().enumerate() {
                let top = PointLabel::Top {
                    g: h,
                    k: pos as isize + 1,
                };
                let target = group.mul(h, space.retraction().apply(si));
                let star = PointLabel::Star { g: target, i: 0 };
                let (lo, hi) = (
                    self.project(space.index_of(&star).expect("star exists")),
                    self.project(space.index_of(&top).expect("top exists")),
                );
                match (lo, hi) {
                    (Some(lo), Some(hi)) if self.poset.is_cover(lo, hi) => {}
                    _ => {
                        return Err(RealizationError::Invariant(format!(
                            "image lacks the cover {star} < {top}"
                        )))
                    }
                }
                if target != h {
                    expected.push((star.to_string(), top.to_string()));
                }
            }
        }
        let size = self.layout.size();
        let mut crossing: Vec<(String, String)> = self
            .poset
            .covers()
            .iter()
            .filter(|&&(lo, hi)| lo / size != hi / size)
            .map(|&(lo, hi)| (self.poset.label(lo).to_string(), self.poset.label(hi).to_string()))
            .collect();
        crossing.sort();
        expected.sort();
        if crossing != expected {
            return Err(RealizationError::Invariant(format!(
                "image has {} cross-gadget covers, expected {}",
                crossing.len(),
                expected.len()
            )));
        }
        Ok(())
    }
}
