//! Finite permutation groups, enumerated into Cayley tables.
//!
//! Products compose left to right: `(g * h)(p) = h(g(p))`. With this
//! convention `(1 2 3) * (1 2) = (2 3)` on 1-based points.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub const DEFAULT_ELEMENT_CAP: usize = 5000;

/// A bijection of `{0, .., n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &p in &images {
            if p >= n || seen[p] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 0..{n}"
                )));
            }
            seen[p] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation of `0..n` from 0-based cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p >= n {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} outside 1..{n}",
                        p + 1
                    )));
                }
                if touched[p] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} repeated in cycles",
                        p + 1
                    )));
                }
                touched[p] = true;
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Self { images })
    }

    /// Parses disjoint-cycle notation over 1-based points, e.g. `(1 2 3)(4 5)`
    /// or `()`. The result acts on `max(min_points, largest point)` points.
    pub fn parse_cycles(s: &str, min_points: usize) -> Result<Self> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s.trim();
        if rest.is_empty() {
            return Err(Error::Parse("empty permutation".into()));
        }
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(Error::Parse(format!("expected `(` at `{rest}`")));
            };
            let Some(close) = body.find(')') else {
                return Err(Error::Parse(format!("unclosed cycle in `{s}`")));
            };
            let mut cycle = Vec::new();
            for tok in body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
            {
                let p: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad point `{tok}` in `{s}`")))?;
                if p == 0 {
                    return Err(Error::Parse(format!("points are 1-based; found 0 in `{s}`")));
                }
                cycle.push(p - 1);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = body[close + 1..].trim_start();
        }
        let n = cycles
            .iter()
            .flatten()
            .map(|&p| p + 1)
            .max()
            .unwrap_or(0)
            .max(min_points);
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Self::from_cycles(n, &refs)
    }

    pub fn points(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, p: usize) -> usize {
        self.images[p]
    }

    /// Left-to-right product: first `self`, then `other`.
    pub fn then(&self, other: &Self) -> Self {
        Self {
            images: self.images.iter().map(|&p| other.images[p]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (p, &q) in self.images.iter().enumerate() {
            images[q] = p;
        }
        Self { images }
    }

    /// Extends with fixed points up to `n` points.
    pub fn padded(&self, n: usize) -> Self {
        let mut images = self.images.clone();
        images.extend(self.images.len()..n);
        Self { images }
    }

    /// Drops trailing fixed points.
    fn trimmed(&self) -> &[usize] {
        let mut end = self.images.len();
        while end > 0 && self.images[end - 1] == end - 1 {
            end -= 1;
        }
        &self.images[..end]
    }

    pub fn is_identity(&self) -> bool {
        self.trimmed().is_empty()
    }
}

impl fmt::Display for Permutation {
    /// Disjoint-cycle notation over 1-based points; `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
                first = false;
                p = self.images[p];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// A finite group given by its Cayley table. Index 0 is the identity.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    points: usize,
    elements: Vec<Permutation>,
    lookup: HashMap<Permutation, usize>,
    cayley: Vec<usize>,
    inverse: Vec<usize>,
    generators: Vec<usize>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && self.cayley == other.cayley
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Number of points the permutation realization acts on.
    pub fn points(&self) -> usize {
        self.points
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.cayley[i * self.order() + j]
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i]
    }

    /// Cycle-notation label of element `i`.
    pub fn label(&self, i: usize) -> String {
        self.elements[i].to_string()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        let moved = p.trimmed();
        if moved.len() > self.points {
            return None;
        }
        let q = Permutation {
            images: moved.to_vec(),
        };
        self.lookup.get(&q.padded(self.points)).copied()
    }

    /// Resolves a cycle-notation word to an element index.
    pub fn parse_element(&self, word: &str) -> Result<usize> {
        let p = Permutation::parse_cycles(word, 0)?;
        self.index_of(&p)
            .ok_or_else(|| Error::UnknownElement(word.trim().to_string()))
    }

    /// Counts `g` with `g * g = e`, the identity included.
    pub fn involution_type_count(&self) -> usize {
        (0..self.order()).filter(|&i| self.mul(i, i) == 0).count()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (i + 1..n).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// Order of element `i`.
    pub fn element_order(&self, i: usize) -> usize {
        let mut k = 1;
        let mut x = i;
        while x != 0 {
            x = self.mul(x, i);
            k += 1;
        }
        k
    }
}

/// Closes `gens` under composition with the default element cap.
pub fn group_from_generators(gens: &[Permutation]) -> Result<Arc<FiniteGroup>> {
    group_from_generators_capped(gens, DEFAULT_ELEMENT_CAP)
}

/// Breadth-first closure over right multiplication by generators. Elements
/// are indexed in discovery order with the identity at 0.
pub fn group_from_generators_capped(gens: &[Permutation], cap: usize) -> Result<Arc<FiniteGroup>> {
    let first = gens.first().ok_or(Error::NoGenerators)?;
    let points = first.points();
    if let Some(bad) = gens.iter().find(|g| g.points() != points) {
        return Err(Error::PointCountMismatch {
            expected: points,
            found: bad.points(),
        });
    }

    let identity = Permutation::identity(points);
    let mut elements = vec![identity.clone()];
    let mut lookup = HashMap::from([(identity, 0usize)]);
    // right[x * k + s] = index of elements[x] * gens[s]
    let mut right: Vec<usize> = Vec::new();
    // BFS tree: element j = parent[j] * gens[via[j]]
    let mut parent = vec![usize::MAX];
    let mut via = vec![usize::MAX];
    let mut queue = VecDeque::from([0usize]);

    let k = gens.len();
    while let Some(x) = queue.pop_front() {
        right.resize((x + 1) * k, 0);
        for (s, g) in gens.iter().enumerate() {
            let y = elements[x].then(g);
            let idx = match lookup.get(&y) {
                Some(&idx) => idx,
                None => {
                    let idx = elements.len();
                    if idx >= cap {
                        return Err(Error::ElementCap { cap });
                    }
                    lookup.insert(y.clone(), idx);
                    elements.push(y);
                    parent.push(x);
                    via.push(s);
                    queue.push_back(idx);
                    idx
                }
            };
            right[x * k + s] = idx;
        }
    }

    let n = elements.len();
    let mut cayley = vec![0usize; n * n];
    for i in 0..n {
        cayley[i * n] = i;
        // indices are BFS-ordered, so parent[j] < j
        for j in 1..n {
            let prefix = cayley[i * n + parent[j]];
            cayley[i * n + j] = right[prefix * k + via[j]];
        }
    }

    let mut inverse = vec![0usize; n];
    for i in 0..n {
        inverse[i] = (0..n)
            .find(|&j| cayley[i * n + j] == 0)
            .expect("every element of a finite group has an inverse");
    }

    let mut generators = Vec::new();
    for g in gens {
        let idx = lookup[g];
        if !generators.contains(&idx) {
            generators.push(idx);
        }
    }

    Ok(Arc::new(FiniteGroup {
        points,
        elements,
        lookup,
        cayley,
        inverse,
        generators,
    }))
}

/// A verified group homomorphism, stored as a total index map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    map: Vec<usize>,
}

impl GroupHom {
    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, g: usize) -> usize {
        self.map[g]
    }

    pub fn identity(g: &Arc<FiniteGroup>) -> Self {
        Self {
            source: g.clone(),
            target: g.clone(),
            map: (0..g.order()).collect(),
        }
    }

    /// The map sending everything to the identity of `target`.
    pub fn collapse(source: &Arc<FiniteGroup>, target: &Arc<FiniteGroup>) -> Self {
        Self {
            source: source.clone(),
            target: target.clone(),
            map: vec![0; source.order()],
        }
    }
}

/// Extends `gen_images` (one target element per generator of `source`, in
/// `source.generators()` order) along words and checks multiplicativity on
/// every pair.
pub fn induce_group_hom(
    source: &Arc<FiniteGroup>,
    target: &Arc<FiniteGroup>,
    gen_images: &[usize],
) -> Result<GroupHom> {
    let gens = source.generators();
    if gen_images.len() != gens.len() {
        return Err(Error::DimensionMismatch {
            expected: gens.len(),
            found: gen_images.len(),
        });
    }
    let pairs: Vec<(usize, usize)> = gens.iter().copied().zip(gen_images.iter().copied()).collect();
    induce_group_hom_from_pairs(source, target, &pairs)
}

/// Like [`induce_group_hom`], but from images of any generating set of
/// `source`, given as `(source element, target element)` pairs.
pub fn induce_group_hom_from_pairs(
    source: &Arc<FiniteGroup>,
    target: &Arc<FiniteGroup>,
    pairs: &[(usize, usize)],
) -> Result<GroupHom> {
    if let Some(&(bad, _)) = pairs.iter().find(|(g, _)| *g >= source.order()) {
        return Err(Error::UnknownElement(format!("source index {bad}")));
    }
    if let Some(&(_, bad)) = pairs.iter().find(|(_, h)| *h >= target.order()) {
        return Err(Error::UnknownElement(format!("target index {bad}")));
    }

    let n = source.order();
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for &(s, img) in pairs {
            let y = source.mul(x, s);
            let value = target.mul(map[x], img);
            if map[y] == usize::MAX {
                map[y] = value;
                queue.push_back(y);
            } else if map[y] != value {
                return Err(Error::NotHomomorphism {
                    left: source.label(x),
                    right: source.label(s),
                });
            }
        }
    }

    if let Some(g) = map.iter().position(|&m| m == usize::MAX) {
        return Err(Error::Precondition(format!(
            "listed elements do not generate the source group ({} unreached)",
            source.label(g)
        )));
    }

    for i in 0..n {
        for j in 0..n {
            if map[source.mul(i, j)] != target.mul(map[i], map[j]) {
                return Err(Error::NotHomomorphism {
                    left: source.label(i),
                    right: source.label(j),
                });
            }
        }
    }

    Ok(GroupHom {
        source: source.clone(),
        target: target.clone(),
        map,
    })
}
