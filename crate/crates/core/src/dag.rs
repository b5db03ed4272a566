//! Longest-path dynamic programming on acyclic products and the solvers
//! built on it: pattern matching, longest common string, matching
//! statistics and longest repeated string.
//!
//! Every routine here also has a `*_within` form that restricts the product
//! to a mask of live vertices. The general-graph solvers use it to work on
//! the acyclic part left after removing cycle vertices.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Label, LabeledGraph, Walk};
use crate::product::{build_product, ProductGraph, Side, VertexSet};

/// Longest path lengths (in edges) starting and ending at every vertex,
/// with pointers that realize them. Ties go to the smallest index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LongestPathTable {
    pub l_plus: Vec<usize>,
    pub l_minus: Vec<usize>,
    pub next: Vec<Option<usize>>,
    pub prev: Vec<Option<usize>>,
}

impl LongestPathTable {
    /// A longest path starting at `x`.
    pub fn path_from(&self, x: usize) -> Vec<usize> {
        let mut out = vec![x];
        let mut cur = x;
        while let Some(y) = self.next[cur] {
            out.push(y);
            cur = y;
        }
        out
    }

    /// A longest path ending at `x`.
    pub fn path_to(&self, x: usize) -> Vec<usize> {
        let mut out = vec![x];
        let mut cur = x;
        while let Some(y) = self.prev[cur] {
            out.push(y);
            cur = y;
        }
        out.reverse();
        out
    }

    /// A longest path passing through `x`.
    pub fn path_through(&self, x: usize) -> Vec<usize> {
        let mut out = self.path_to(x);
        out.extend(self.path_from(x).into_iter().skip(1));
        out
    }
}

/// A walk together with the string it spells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Occurrence {
    pub walk: Walk,
    pub string: Vec<Label>,
}

/// Two walks spelling the same string, one per factor graph (or two
/// distinct walks of the same graph for repeats).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkPair {
    pub string: Vec<Label>,
    pub first: Walk,
    pub second: Walk,
}

/// A finite optimum measured in characters. Length 0 stands for the empty
/// string and carries no witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LongestMatch {
    pub length: usize,
    pub witness: Option<WalkPair>,
}

impl LongestMatch {
    pub fn empty() -> Self {
        LongestMatch { length: 0, witness: None }
    }

    pub(crate) fn from_product_path(p: &ProductGraph<'_>, path: &[usize]) -> Self {
        LongestMatch {
            length: path.len(),
            witness: Some(WalkPair {
                string: p.spell(path),
                first: p.project_vertices(path, Side::Left),
                second: p.project_vertices(path, Side::Right),
            }),
        }
    }
}

fn full_mask(p: &ProductGraph<'_>) -> Vec<bool> {
    vec![true; p.vertex_count()]
}

/// Orders the vertices so every edge points forward.
pub fn topo_order(p: &ProductGraph<'_>) -> Result<Vec<usize>> {
    topo_order_within(p, &full_mask(p))
}

/// Kahn's algorithm on the live vertices; on failure reports one edge that
/// closes a cycle.
pub fn topo_order_within(p: &ProductGraph<'_>, alive: &[bool]) -> Result<Vec<usize>> {
    let n = p.vertex_count();
    let mut indeg = vec![0usize; n];
    let mut live = 0;
    for x in (0..n).filter(|&x| alive[x]) {
        live += 1;
        indeg[x] = p.in_neighbors(x).iter().filter(|&&y| alive[y]).count();
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&x| alive[x] && indeg[x] == 0).collect();
    let mut order = Vec::with_capacity(live);
    while let Some(x) = queue.pop_front() {
        order.push(x);
        for &y in p.out_neighbors(x) {
            if alive[y] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    queue.push_back(y);
                }
            }
        }
    }
    if order.len() == live {
        return Ok(order);
    }
    let (u, v) = find_back_edge(p, alive, &indeg);
    Err(Error::Cycle(u, v))
}

/// Vertices with leftover in-degree after Kahn's algorithm all have a live
/// predecessor that is also left over, so walking predecessors must repeat.
fn find_back_edge(p: &ProductGraph<'_>, alive: &[bool], indeg: &[usize]) -> (usize, usize) {
    let stuck = |x: usize| alive[x] && indeg[x] > 0;
    let start = (0..p.vertex_count()).find(|&x| stuck(x)).expect("a stuck vertex");
    let mut seen = vec![false; p.vertex_count()];
    let mut cur = start;
    loop {
        seen[cur] = true;
        let pred = *p.in_neighbors(cur).iter().find(|&&y| stuck(y)).expect("stuck vertex has a stuck predecessor");
        if seen[pred] {
            return (pred, cur);
        }
        cur = pred;
    }
}

pub fn longest_paths(p: &ProductGraph<'_>) -> Result<LongestPathTable> {
    longest_paths_within(p, &full_mask(p))
}

/// Longest-path table of the subgraph induced by the live vertices. Dead
/// vertices get zeros and no pointers.
pub fn longest_paths_within(p: &ProductGraph<'_>, alive: &[bool]) -> Result<LongestPathTable> {
    let order = topo_order_within(p, alive)?;
    let n = p.vertex_count();
    let mut l_plus = vec![0usize; n];
    let mut l_minus = vec![0usize; n];
    let mut next = vec![None; n];
    let mut prev = vec![None; n];
    for &x in order.iter().rev() {
        for &y in p.out_neighbors(x) {
            if alive[y] && (next[x].is_none() || l_plus[y] + 1 > l_plus[x]) {
                l_plus[x] = l_plus[y] + 1;
                next[x] = Some(y);
            }
        }
    }
    for &x in &order {
        for &y in p.in_neighbors(x) {
            if alive[y] && (prev[x].is_none() || l_minus[y] + 1 > l_minus[x]) {
                l_minus[x] = l_minus[y] + 1;
                prev[x] = Some(y);
            }
        }
    }
    Ok(LongestPathTable { l_plus, l_minus, next, prev })
}

/// Finds an occurrence of `pattern` in `g` through `g ⊗ P`, where `P` is
/// the path spelling the pattern. That product is acyclic whatever `g` is.
pub fn smlg(g: &LabeledGraph, pattern: &[Label]) -> Result<Option<Occurrence>> {
    if pattern.is_empty() {
        return Err(Error::EmptyPattern);
    }
    if !g.is_directed() {
        return Err(Error::ExpectedDirected);
    }
    let pat = LabeledGraph::path(pattern);
    let p = build_product(g, &pat)?;
    let table = longest_paths(&p)?;
    let target = pattern.len() - 1;
    let start = (0..p.vertex_count()).find(|&x| p.vertex(x).right == 0 && table.l_plus[x] >= target);
    Ok(start.map(|x| {
        // The right component advances one pattern position per edge, so
        // the longest path from position 0 has exactly |pattern| vertices.
        let path = table.path_from(x);
        debug_assert_eq!(path.len(), pattern.len());
        Occurrence { walk: p.project_vertices(&path, Side::Left), string: pattern.to_vec() }
    }))
}

/// Longest common string of the two factors of an acyclic product.
pub fn lcsp_dag(p: &ProductGraph<'_>) -> Result<LongestMatch> {
    lcsp_dag_within(p, &full_mask(p))
}

pub fn lcsp_dag_within(p: &ProductGraph<'_>, alive: &[bool]) -> Result<LongestMatch> {
    let table = longest_paths_within(p, alive)?;
    let best = argmax((0..p.vertex_count()).filter(|&x| alive[x]), |x| table.l_plus[x]);
    Ok(match best {
        Some(x) => LongestMatch::from_product_path(p, &table.path_from(x)),
        None => LongestMatch::empty(),
    })
}

/// Matching statistics of the left factor: for each left vertex `v`, one
/// plus the longest path from any `(v, w)`, or 0 if `L(v)` is absent on the
/// right.
pub fn msp_dag(p: &ProductGraph<'_>) -> Result<Vec<usize>> {
    msp_dag_within(p, &full_mask(p))
}

pub fn msp_dag_within(p: &ProductGraph<'_>, alive: &[bool]) -> Result<Vec<usize>> {
    let table = longest_paths_within(p, alive)?;
    let mut ms = vec![0usize; p.left().vertex_count()];
    for (x, pv) in p.vertices().iter().enumerate() {
        if alive[x] {
            ms[pv.left] = ms[pv.left].max(table.l_plus[x] + 1);
        }
    }
    Ok(ms)
}

/// Longest repeated string of a DAG from its self-product: the longest path
/// through any vertex of `diff`, with `l_minus + l_plus + 1` characters.
pub fn lrsp_dag(p: &ProductGraph<'_>, diff: &VertexSet) -> Result<LongestMatch> {
    lrsp_dag_within(p, diff, &full_mask(p))
}

pub fn lrsp_dag_within(p: &ProductGraph<'_>, diff: &VertexSet, alive: &[bool]) -> Result<LongestMatch> {
    let table = longest_paths_within(p, alive)?;
    let best = argmax(diff.iter().filter(|&x| alive[x]), |x| table.l_plus[x] + table.l_minus[x]);
    Ok(match best {
        Some(x) => LongestMatch::from_product_path(p, &table.path_through(x)),
        None => LongestMatch::empty(),
    })
}

/// First element with the maximal key.
fn argmax(items: impl Iterator<Item = usize>, key: impl Fn(usize) -> usize) -> Option<usize> {
    let mut best: Option<(usize, usize)> = None;
    for x in items {
        let k = key(x);
        if best.is_none_or(|(_, bk)| k > bk) {
            best = Some((x, k));
        }
    }
    best.map(|(x, _)| x)
}
