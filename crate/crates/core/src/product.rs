//! The labeled direct product `G1 ⊗ G2`: vertex pairs with equal labels,
//! joined when both components are joined in their own graphs.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Label, LabeledGraph, Walk};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProductVertex {
    pub left: usize,
    pub right: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A subset of product vertices, stored as a membership mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet(Vec<bool>);

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet(vec![false; universe])
    }

    pub fn from_mask(mask: Vec<bool>) -> Self {
        VertexSet(mask)
    }

    pub fn from_indices(universe: usize, members: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(universe);
        for x in members {
            s.insert(x);
        }
        s
    }

    pub fn insert(&mut self, x: usize) {
        self.0[x] = true;
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0[x]
    }

    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn len(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.0.iter().any(|&b| b)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i)
    }

    pub fn mask(&self) -> &[bool] {
        &self.0
    }

    pub fn complement(&self) -> Self {
        VertexSet(self.0.iter().map(|b| !b).collect())
    }
}

/// Materialized `G1 ⊗ G2`.
///
/// Vertices are sorted by `(left, right)`, so the vertices with a given left
/// component form one contiguous block. Adjacency is stored in compressed
/// form, with every neighbor list ascending.
#[derive(Debug, Clone)]
pub struct ProductGraph<'g> {
    left: &'g LabeledGraph,
    right: &'g LabeledGraph,
    vertices: Vec<ProductVertex>,
    left_offsets: Vec<usize>,
    out_offsets: Vec<usize>,
    out_targets: Vec<usize>,
    in_offsets: Vec<usize>,
    in_sources: Vec<usize>,
    work: usize,
}

/// Product size computed from label histograms alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeEstimate {
    pub vertex_count: u64,
    pub edge_count: u64,
}

/// Builds `g1 ⊗ g2` in time linear in the inputs plus the output.
///
/// Right-hand vertices are bucketed by label, so the block of product
/// vertices `(u, *)` is exactly the bucket of `L(u)` and the index of
/// `(u, v)` is `block_start(u) + rank(v)`. Right-hand edges are grouped by
/// endpoint labels; each left edge is then paired with its matching group.
pub fn build_product<'g>(g1: &'g LabeledGraph, g2: &'g LabeledGraph) -> Result<ProductGraph<'g>> {
    if !g1.is_directed() || !g2.is_directed() {
        return Err(Error::ExpectedDirected);
    }
    let n1 = g1.vertex_count();
    let n2 = g2.vertex_count();
    let mut work = n1 + n2 + g1.edge_count() + g2.edge_count();

    let sigma = g1.used_sigma().max(g2.used_sigma()) as usize;
    let mut bucket_size = vec![0usize; sigma];
    let mut rank = vec![0usize; n2];
    for v in 0..n2 {
        let b = &mut bucket_size[g2.label(v).index()];
        rank[v] = *b;
        *b += 1;
    }
    let mut buckets: Vec<Vec<usize>> = bucket_size.iter().map(|&c| Vec::with_capacity(c)).collect();
    for v in 0..n2 {
        buckets[g2.label(v).index()].push(v);
    }

    let mut left_offsets = Vec::with_capacity(n1 + 1);
    let mut vertices = Vec::new();
    left_offsets.push(0);
    for u in 0..n1 {
        for &v in &buckets[g1.label(u).index()] {
            vertices.push(ProductVertex { left: u, right: v });
        }
        left_offsets.push(vertices.len());
    }
    work += vertices.len();

    let mut groups: HashMap<(Label, Label), Vec<(usize, usize)>> = HashMap::new();
    for v in 0..n2 {
        for &w in g2.out_neighbors(v) {
            groups.entry((g2.label(v), g2.label(w))).or_default().push((v, w));
        }
    }

    let mut raw = Vec::new();
    for u in 0..n1 {
        for &x in g1.out_neighbors(u) {
            work += 1;
            if let Some(group) = groups.get(&(g1.label(u), g1.label(x))) {
                for &(v, w) in group {
                    raw.push((left_offsets[u] + rank[v], left_offsets[x] + rank[w]));
                }
            }
        }
    }
    work += raw.len();

    // Within one source the pairs above come out with ascending targets, so
    // a stable counting sort by source leaves every list sorted.
    let nv = vertices.len();
    let (out_offsets, out_targets) = bucket_by(nv, raw.iter().map(|&(s, t)| (s, t)));
    let (in_offsets, in_sources) = bucket_by(
        nv,
        (0..nv).flat_map(|s| out_targets[out_offsets[s]..out_offsets[s + 1]].iter().map(move |&t| (t, s))),
    );

    Ok(ProductGraph {
        left: g1,
        right: g2,
        vertices,
        left_offsets,
        out_offsets,
        out_targets,
        in_offsets,
        in_sources,
        work,
    })
}

/// Stable counting sort of `(key, value)` pairs into compressed rows.
fn bucket_by(rows: usize, pairs: impl Iterator<Item = (usize, usize)> + Clone) -> (Vec<usize>, Vec<usize>) {
    let mut offsets = vec![0usize; rows + 1];
    for (k, _) in pairs.clone() {
        offsets[k + 1] += 1;
    }
    for i in 0..rows {
        offsets[i + 1] += offsets[i];
    }
    let mut cursor = offsets.clone();
    let mut values = vec![0usize; offsets[rows]];
    for (k, v) in pairs {
        values[cursor[k]] = v;
        cursor[k] += 1;
    }
    (offsets, values)
}

/// `g ⊗ g`. Its diagonal `{(v, v)}` is always present.
pub fn self_product(g: &LabeledGraph) -> Result<ProductGraph<'_>> {
    build_product(g, g)
}

/// `|V'| = Σ_a |V1^a|·|V2^a|` and `|E'| = Σ_{a,b} |E1^{a,b}|·|E2^{a,b}|`,
/// without building the product.
pub fn product_size(g1: &LabeledGraph, g2: &LabeledGraph) -> Result<SizeEstimate> {
    if !g1.is_directed() || !g2.is_directed() {
        return Err(Error::ExpectedDirected);
    }
    let sigma = g1.used_sigma().max(g2.used_sigma()) as usize;
    let mut h1 = vec![0u64; sigma];
    let mut h2 = vec![0u64; sigma];
    for &l in g1.labels() {
        h1[l.index()] += 1;
    }
    for &l in g2.labels() {
        h2[l.index()] += 1;
    }
    let vertex_count = h1.iter().zip(&h2).map(|(a, b)| a * b).sum();

    let edge_histogram = |g: &LabeledGraph| {
        let mut h: HashMap<(Label, Label), u64> = HashMap::new();
        for &(u, v) in g.edges() {
            *h.entry((g.label(u), g.label(v))).or_default() += 1;
        }
        h
    };
    let e1 = edge_histogram(g1);
    let e2 = edge_histogram(g2);
    let edge_count = e1.iter().map(|(k, c)| c * e2.get(k).copied().unwrap_or(0)).sum();
    Ok(SizeEstimate { vertex_count, edge_count })
}

impl<'g> ProductGraph<'g> {
    pub fn left(&self) -> &'g LabeledGraph {
        self.left
    }

    pub fn right(&self) -> &'g LabeledGraph {
        self.right
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.out_targets.len()
    }

    pub fn size(&self) -> SizeEstimate {
        SizeEstimate { vertex_count: self.vertex_count() as u64, edge_count: self.edge_count() as u64 }
    }

    pub fn vertices(&self) -> &[ProductVertex] {
        &self.vertices
    }

    pub fn vertex(&self, x: usize) -> ProductVertex {
        self.vertices[x]
    }

    pub fn label(&self, x: usize) -> Label {
        self.left.label(self.vertices[x].left)
    }

    pub fn out_neighbors(&self, x: usize) -> &[usize] {
        &self.out_targets[self.out_offsets[x]..self.out_offsets[x + 1]]
    }

    pub fn in_neighbors(&self, x: usize) -> &[usize] {
        &self.in_sources[self.in_offsets[x]..self.in_offsets[x + 1]]
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.out_neighbors(x).binary_search(&y).is_ok()
    }

    /// All edges, sorted by `(source, target)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count()).flat_map(move |x| self.out_neighbors(x).iter().map(move |&y| (x, y)))
    }

    /// Index of the product vertex `(u, v)`, if the labels match.
    pub fn index_of(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.left.vertex_count() {
            return None;
        }
        let (lo, hi) = (self.left_offsets[u], self.left_offsets[u + 1]);
        self.vertices[lo..hi].binary_search_by_key(&v, |p| p.right).ok().map(|i| lo + i)
    }

    /// Product vertices whose left component is `u`.
    pub fn block(&self, u: usize) -> std::ops::Range<usize> {
        self.left_offsets[u]..self.left_offsets[u + 1]
    }

    /// Whether both factors are the same graph.
    pub fn is_self_product(&self) -> bool {
        std::ptr::eq(self.left, self.right) || self.left == self.right
    }

    /// The off-diagonal vertices `(u, v)` with `u != v`.
    pub fn off_diagonal(&self) -> VertexSet {
        VertexSet::from_mask(self.vertices.iter().map(|p| p.left != p.right).collect())
    }

    /// Elementary steps spent by the construction: input scans, lookups
    /// and emitted vertices and edges.
    pub fn construction_work(&self) -> usize {
        self.work
    }

    pub fn validate_walk(&self, w: &Walk) -> Result<()> {
        for &x in w.vertices() {
            if x >= self.vertex_count() {
                return Err(Error::VertexOutOfRange(x));
            }
        }
        for pair in w.vertices().windows(2) {
            if !self.has_edge(pair[0], pair[1]) {
                return Err(Error::NotAdjacent(pair[0], pair[1]));
            }
        }
        Ok(())
    }

    pub fn spell(&self, vertices: &[usize]) -> Vec<Label> {
        vertices.iter().map(|&x| self.label(x)).collect()
    }

    /// Projection of a product vertex sequence, unchecked.
    pub(crate) fn project_vertices(&self, vertices: &[usize], side: Side) -> Walk {
        let vs = vertices
            .iter()
            .map(|&x| match side {
                Side::Left => self.vertices[x].left,
                Side::Right => self.vertices[x].right,
            })
            .collect();
        Walk::new(vs).expect("non-empty product walk")
    }
}

/// Maps a product walk to the walk of one factor.
pub fn project(p: &ProductGraph<'_>, w: &Walk, side: Side) -> Result<Walk> {
    p.validate_walk(w)?;
    Ok(p.project_vertices(w.vertices(), side))
}

/// Pairs two equally spelled factor walks into a product walk.
pub fn lift(p: &ProductGraph<'_>, w1: &Walk, w2: &Walk) -> Result<Walk> {
    let (a, b) = (w1.vertices(), w2.vertices());
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    w1.validate(p.left())?;
    w2.validate(p.right())?;
    let mut out = Vec::with_capacity(a.len());
    for (&u, &v) in a.iter().zip(b) {
        match p.index_of(u, v) {
            Some(x) => out.push(x),
            None => return Err(Error::SpellingMismatch),
        }
    }
    Walk::new(out)
}
